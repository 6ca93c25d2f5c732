#include "blipfield/lorentz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "blipfield/errors.hpp"

namespace blipfield {

namespace {

constexpr double inv_sqrt_2pi = 0.3989422804014326779;

double support_radius(const cvec& v, const std::vector<double>& axis, double floor_frac) {
  double peak = 0.0;
  for (const auto& z : v) peak = std::max(peak, std::abs(z));
  double radius = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) > floor_frac * peak) radius = std::max(radius, std::abs(axis[i]));
  return radius;
}

// Spectral-side preconditions shared by both boost routes: the channel must
// sit inside the band with margin, both before and after the k -> k*D_s map,
// and must carry no Nyquist weight.
void check_band_margin(const cvec& momentum, const Lattice& lat, double ds) {
  double peak = 0.0;
  for (const auto& z : momentum) peak = std::max(peak, std::abs(z));
  if (peak == 0.0) return;
  if (std::abs(momentum[static_cast<std::size_t>(lat.nyquist_index())]) > 1e-12 * peak)
    throw PreconditionError("boost input carries Nyquist weight");
  const double supp = support_radius(momentum, lat.ks, 1e-12);
  if (supp > 0.98 * lat.kmax())
    throw PreconditionError("spectral support too close to the band edge for a boost");
  if (supp * ds > 0.98 * lat.kmax())
    throw PreconditionError("boost would push spectral support past the band edge");
}

// Defining forward transform evaluated at an arbitrary wavenumber:
//   psi~(q) = (dx / sqrt(2 pi)) sum_j e^{-i s q x_j} psi_j.
std::complex<double> forward_at(const cvec& position, double q, int s, const Lattice& lat) {
  std::complex<double> acc = 0.0;
  for (std::size_t j = 0; j < position.size(); ++j)
    acc += position[j] * std::polar(1.0, -s * q * lat.xs[j]);
  return lat.dx * inv_sqrt_2pi * acc;
}

// Band-limited inverse transform at an arbitrary point (Nyquist term dropped;
// its off-grid phase is convention-dependent and its weight is checked zero).
std::complex<double> inverse_at(const cvec& momentum, double y, int s, const Lattice& lat) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 1; i < momentum.size(); ++i)
    acc += momentum[i] * std::polar(1.0, s * lat.ks[i] * y);
  return lat.dk() * inv_sqrt_2pi * acc;
}

}  // namespace

double doppler_factor(double beta, Direction dir) {
  if (!std::isfinite(beta) || std::abs(beta) >= 1.0)
    throw std::invalid_argument("boost velocity must satisfy |beta| < 1");
  const double d = std::sqrt((1.0 - beta) / (1.0 + beta));
  return dir == Direction::Right ? d : 1.0 / d;
}

StateVector boost_state(const StateVector& st, double beta) {
  if (!st.lattice) throw std::invalid_argument("state requires a valid lattice");
  if (!std::isfinite(beta) || std::abs(beta) >= 1.0)
    throw std::invalid_argument("boost velocity must satisfy |beta| < 1");
  if (beta == 0.0) return st;

  const Lattice& lat = *st.lattice;
  StateVector mom = to_rep(st, Rep::Momentum);
  StateVector out = mom;

  for (Channel ch : all_channels()) {
    cvec& dst = out.channel(ch);
    const cvec& src = mom.channel(ch);
    if (is_zero_channel(src)) continue;

    const double ds = doppler_factor(beta, ch.dir);
    check_band_margin(src, lat, ds);

    // psi'(p) = D_s^{-1/2} psi~(p / D_s), evaluated through the position
    // samples so off-grid wavenumbers get the exact band-limited value.
    const cvec position = to_position({Rep::Momentum, src}, ch.dir, lat).values;
    const int s = sign(ch.dir);
    const double jac = 1.0 / std::sqrt(ds);
    for (int i = 0; i < lat.n; ++i) {
      const double q = lat.ks[static_cast<std::size_t>(i)] / ds;
      dst[static_cast<std::size_t>(i)] =
          std::abs(q) <= lat.kmax() ? jac * forward_at(position, q, s, lat)
                                    : std::complex<double>{};
    }
    dst[static_cast<std::size_t>(lat.nyquist_index())] = {};
  }
  return st.rep == Rep::Position ? to_rep(out, Rep::Position) : out;
}

FieldSnapshot boost_classical_fields(const ChannelFieldProfiles& profiles, double beta,
                                     const PhysicalConstants& consts) {
  if (!profiles.lattice) throw std::invalid_argument("profiles require a valid lattice");
  if (!std::isfinite(beta) || std::abs(beta) >= 1.0)
    throw std::invalid_argument("boost velocity must satisfy |beta| < 1");
  const Lattice& lat = *profiles.lattice;

  ChannelFieldProfiles boosted;
  boosted.t = profiles.t;
  boosted.lattice = profiles.lattice;

  for (Channel ch : all_channels()) {
    const cvec& f = profiles.channel(ch);
    cvec& dst = boosted.values[static_cast<std::size_t>(ch.index())];
    dst.assign(static_cast<std::size_t>(lat.n), {});
    if (is_zero_channel(f) || beta == 0.0) {
      dst = f;
      continue;
    }

    const double ds = doppler_factor(beta, ch.dir);
    const cvec ftilde = to_momentum({Rep::Position, f}, ch.dir, lat).values;
    check_band_margin(ftilde, lat, ds);
    if (ds > 1.0) {
      // F'(x') = D_s F(D_s x') reads up to |x| = D_s L/2; on the periodic
      // domain those reads wrap, so the profile's support must stay clear of
      // the wrapped window or an image of the packet aliases in.
      const double x_supp = support_radius(f, lat.xs, 1e-12);
      if (x_supp >= 0.98 * lat.length * (1.0 - 0.5 * ds))
        throw PreconditionError(
            "dilated classical boost would wrap the profile around the periodic domain");
    }

    const int s = sign(ch.dir);
    for (int j = 0; j < lat.n; ++j)
      dst[static_cast<std::size_t>(j)] =
          ds * inverse_at(ftilde, ds * lat.xs[static_cast<std::size_t>(j)], s, lat);
  }
  return assemble_snapshot(boosted, consts);
}

TwoPathResult covariance_two_path(const StateVector& coherent, double beta,
                                  const PhysicalConstants& consts, double exponent) {
  if (coherent.kind != StateKind::Coherent)
    throw std::invalid_argument("two-path covariance check takes a coherent amplitude");

  const StateVector boosted = boost_state(coherent, beta);
  const FieldSnapshot via_state =
      assemble_snapshot(channel_field_profiles(boosted, 0.0, consts, {}, exponent), consts);

  const ChannelFieldProfiles rest_profiles =
      channel_field_profiles(coherent, 0.0, consts, {}, exponent);
  const FieldSnapshot via_fields = boost_classical_fields(rest_profiles, beta, consts);

  TwoPathResult res;
  for (FieldComponent comp :
       {FieldComponent::Ey, FieldComponent::Ez, FieldComponent::By, FieldComponent::Bz}) {
    const cvec& a = via_state.component(comp);
    const cvec& b = via_fields.component(comp);
    for (std::size_t j = 0; j < a.size(); ++j) {
      res.max_abs_diff = std::max(res.max_abs_diff, std::abs(a[j].real() - b[j].real()));
      res.peak_field = std::max(res.peak_field, std::abs(a[j].real()));
    }
  }
  res.normalized = res.peak_field > 0.0 ? res.max_abs_diff / res.peak_field : 0.0;
  return res;
}

}
