#pragma once

#include <complex>
#include <vector>

#include "blipfield/constants.hpp"
#include "blipfield/lattice.hpp"

namespace blipfield {

using cvec = std::vector<std::complex<double>>;

enum class Rep { Position, Momentum };

/// A single channel's amplitude profile in one representation, samples
/// aligned with Lattice::xs (Position) or Lattice::ks (Momentum).
struct ChannelAmplitude {
  Rep rep = Rep::Position;
  cvec values;
};

/// Direction-signed unitary transform pair discretising
///   a~(k) = (2*pi)^{-1/2} Int dx e^{-i s k x} a(x)
/// and its inverse. The pair is exactly unitary on the lattice:
///   dx * sum |a|^2 == dk * sum |a~|^2 to rounding.
/// Left-moving transforms reuse the right-moving one through the index
/// reversal k -> -k (Nyquist fixed), which reproduces the defining sum
/// exactly for even n.
ChannelAmplitude to_momentum(const ChannelAmplitude& a, Direction dir, const Lattice& lat);
ChannelAmplitude to_position(const ChannelAmplitude& a, Direction dir, const Lattice& lat);

}
