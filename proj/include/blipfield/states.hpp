#pragma once

#include <array>
#include <memory>
#include <string>

#include "blipfield/constants.hpp"
#include "blipfield/lattice.hpp"
#include "blipfield/transforms.hpp"

namespace blipfield {

/// SingleExcitation amplitudes are unit-norm wavefunctions (probability
/// convention); Coherent amplitudes are unconstrained classical profiles.
enum class StateKind { SingleExcitation, Coherent };

enum class PacketShape { Gaussian, Rectangular, Custom };

struct PacketSpec {
  PacketShape shape = PacketShape::Gaussian;
  Channel channel{Direction::Right, Polarization::H};
  double center = 0.0;    // x0
  double width = 1.0;     // sigma (Gaussian) or full width (Rectangular)
  double carrier = 0.0;   // k0, enters as e^{i s k0 x}
  double phase = 0.0;     // overall phase in radians
  double amplitude = 1.0; // peak scale; ignored for SingleExcitation (normalised away)
  cvec samples;           // Custom: position-rep samples, length n
  std::string samples_file; // Custom via config: CSV source for samples
};

/// Four-channel field amplitude on a shared lattice.
struct StateVector {
  StateKind kind = StateKind::SingleExcitation;
  Rep rep = Rep::Position;
  std::array<cvec, 4> channels;
  std::shared_ptr<const Lattice> lattice;

  const cvec& channel(Channel ch) const { return channels[ch.index()]; }
  cvec& channel(Channel ch) { return channels[ch.index()]; }
};

StateVector zero_state(std::shared_ptr<const Lattice> lat, StateKind kind,
                       Rep rep = Rep::Position);

/// Builds a localized packet in one channel. The envelope must be negligible
/// at the domain edge (< 1e-12 of its peak), else PreconditionError. The
/// Nyquist amplitude is zeroed in momentum space so the profile stays in the
/// band where the direction-signed grid conventions are unambiguous.
/// SingleExcitation packets come out unit-norm.
StateVector make_packet(const PacketSpec& spec, std::shared_ptr<const Lattice> lat,
                        StateKind kind);

/// Normalised stand-in for one discrete mode of the localized boson basis:
/// amplitude 1/sqrt(dx) at a single site (no Nyquist surgery).
StateVector blip_basis_proxy(int site, Channel ch, std::shared_ptr<const Lattice> lat);

/// Channel-diagonal L2 inner product, dx- or dk-weighted by rep. Both states
/// must be SingleExcitation on the same lattice and in the same rep.
std::complex<double> inner_product(const StateVector& a, const StateVector& b);

double norm(const StateVector& st);

StateVector to_rep(const StateVector& st, Rep rep);

/// Amplitude sum (no renormalisation); kinds and lattices must match.
StateVector superpose(const StateVector& a, const StateVector& b);

StateVector normalized(const StateVector& st);

struct PositiveProjection {
  StateVector state;          // momentum rep, k <= 0 amplitudes zeroed, NOT renormalised
  double discarded_fraction;  // norm^2 fraction removed
};

/// Restriction to positive wavenumbers, the regime where the standard and
/// direction-signed evolution laws coincide.
PositiveProjection project_positive_wavenumbers(const StateVector& st);

/// Reads n complex samples from CSV rows "re,im" (or "re") for PacketSpec::samples.
cvec load_samples_csv(const std::string& path, int n);

bool is_zero_channel(const cvec& values);

}
