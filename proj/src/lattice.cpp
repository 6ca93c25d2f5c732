#include "blipfield/lattice.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "blipfield/constants.hpp"

namespace blipfield {

void PhysicalConstants::validate() const {
  if (!(c > 0.0) || !(hbar > 0.0) || !(eps0 > 0.0) || !(area > 0.0))
    throw std::invalid_argument("physical constants must all be positive");
}

Channel Channel::from_index(int i) {
  if (i < 0 || i > 3) throw std::invalid_argument("channel index out of range");
  return all_channels()[static_cast<std::size_t>(i)];
}

std::string to_string(Channel ch) {
  std::string s = ch.dir == Direction::Left ? "left," : "right,";
  s += ch.pol == Polarization::H ? "H" : "V";
  return s;
}

double Lattice::dk() const { return 2.0 * std::numbers::pi / length; }

double Lattice::kmax() const { return std::numbers::pi * n / length; }

Lattice build_lattice(int n, double length) {
  if (n < 8 || (n & (n - 1)) != 0)
    throw std::invalid_argument("lattice size must be a power of two >= 8");
  if (!(length > 0.0)) throw std::invalid_argument("lattice length must be positive");

  Lattice lat;
  lat.n = n;
  lat.length = length;
  lat.dx = length / n;
  lat.xs.resize(n);
  lat.ks.resize(n);
  const double dk = 2.0 * std::numbers::pi / length;
  for (int j = 0; j < n; ++j) {
    lat.xs[j] = -0.5 * length + j * lat.dx;
    lat.ks[j] = dk * (j - n / 2);
  }
  return lat;
}

bool same_lattice(const Lattice& a, const Lattice& b) {
  return a.n == b.n && a.length == b.length;
}

}
