#pragma once

#include <array>
#include <compare>
#include <string>

namespace blipfield {

/// Unit system for the field formulas. Natural units (all ones) are the
/// default everywhere; the SI preset exists for dimensionful output.
struct PhysicalConstants {
  double c = 1.0;     // speed of light
  double hbar = 1.0;  // reduced Planck constant
  double eps0 = 1.0;  // vacuum permittivity
  double area = 1.0;  // transverse quantisation area of the 1D reduction

  static PhysicalConstants natural() { return {}; }
  static PhysicalConstants si() {
    return {299792458.0, 1.054571817e-34, 8.8541878128e-12, 1.0};
  }

  void validate() const;  // throws std::invalid_argument unless all > 0
};

/// Propagation direction. The underlying value is the sign s that appears in
/// the transform phase e^{-i s k x} and the transport law x - s c t.
enum class Direction : int { Left = -1, Right = +1 };

inline constexpr int sign(Direction d) { return static_cast<int>(d); }

enum class Polarization : int { H = 0, V = 1 };

/// One of the four independent mode channels (direction x polarization).
struct Channel {
  Direction dir = Direction::Right;
  Polarization pol = Polarization::H;

  /// Fixed storage order: (Left,H)=0, (Left,V)=1, (Right,H)=2, (Right,V)=3.
  int index() const {
    return (dir == Direction::Left ? 0 : 2) + (pol == Polarization::V ? 1 : 0);
  }
  static Channel from_index(int i);

  friend bool operator==(const Channel&, const Channel&) = default;
};

inline constexpr std::array<Channel, 4> all_channels() {
  return {Channel{Direction::Left, Polarization::H},
          Channel{Direction::Left, Polarization::V},
          Channel{Direction::Right, Polarization::H},
          Channel{Direction::Right, Polarization::V}};
}

std::string to_string(Channel ch);

}
