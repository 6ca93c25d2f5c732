#include "blipfield/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace blipfield {

StateVector evolve(const StateVector& st, double t, EvolutionLaw law,
                   const PhysicalConstants& consts) {
  consts.validate();
  if (!st.lattice) throw std::invalid_argument("state requires a valid lattice");
  if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");

  StateVector mom = to_rep(st, Rep::Momentum);
  const auto& ks = mom.lattice->ks;
  for (Channel ch : all_channels()) {
    cvec& v = mom.channel(ch);
    if (is_zero_channel(v)) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double k = ks[i];
      const double w = consts.c * (law == EvolutionLaw::Blip ? k : std::abs(k));
      v[i] *= std::polar(1.0, -w * t);
    }
  }
  return st.rep == Rep::Position ? to_rep(mom, Rep::Position) : mom;
}

StateVector exact_transport(const StateVector& st, int sites) {
  if (!st.lattice) throw std::invalid_argument("state requires a valid lattice");
  if (st.rep != Rep::Position)
    throw std::invalid_argument("transport oracle works on the position representation");
  const int n = st.lattice->n;
  StateVector out = st;
  for (Channel ch : all_channels()) {
    const cvec& in = st.channel(ch);
    cvec& dst = out.channel(ch);
    const int shift = sign(ch.dir) * sites;
    for (int j = 0; j < n; ++j) {
      int src = (j - shift) % n;
      if (src < 0) src += n;
      dst[static_cast<std::size_t>(j)] = in[static_cast<std::size_t>(src)];
    }
  }
  return out;
}

double rms_width(const StateVector& st, Channel ch) {
  if (!st.lattice) throw std::invalid_argument("state requires a valid lattice");
  if (st.rep != Rep::Position)
    throw std::invalid_argument("rms width is defined on the position representation");
  const auto& lat = *st.lattice;
  const cvec& v = st.channel(ch);

  double total = 0.0;
  for (const auto& z : v) total += std::norm(z);
  if (total == 0.0) throw std::invalid_argument("rms width of a zero-norm channel");

  // Circular mean: average the phases theta = 2*pi*x/L on the unit circle,
  // then measure spread in the unwrapped displacement from that mean.
  const double two_pi = 2.0 * std::numbers::pi;
  double cs = 0.0, sn = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double w = std::norm(v[j]);
    const double theta = two_pi * lat.xs[j] / lat.length;
    cs += w * std::cos(theta);
    sn += w * std::sin(theta);
  }
  const double mean_x = lat.length / two_pi * std::atan2(sn, cs);

  double var = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    double d = lat.xs[j] - mean_x;
    d -= lat.length * std::round(d / lat.length);  // wrap to [-L/2, L/2)
    var += std::norm(v[j]) * d * d;
  }
  return std::sqrt(var / total);
}

}
