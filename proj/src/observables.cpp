#include "blipfield/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "blipfield/dynamics.hpp"
#include "blipfield/errors.hpp"

namespace blipfield {

void PhaseGauge::validate(const Lattice& lat) const {
  if (phi.empty()) return;
  if (static_cast<int>(phi.size()) != lat.n)
    throw std::invalid_argument("phase gauge length does not match lattice");
  for (int i = 0; i < lat.n; ++i) {
    // phi(-k) = -phi(k); the self-paired samples (k = 0, Nyquist) must vanish.
    if (std::abs(phi[i] + phi[static_cast<std::size_t>(lat.paired_index(i))]) > 1e-12)
      throw PreconditionError("phase gauge is not antisymmetric in k");
  }
}

PhaseGauge PhaseGauge::random(const Lattice& lat, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-std::numbers::pi, std::numbers::pi);
  PhaseGauge g;
  g.phi.assign(static_cast<std::size_t>(lat.n), 0.0);
  for (int i = lat.zero_index() + 1; i < lat.n; ++i) {
    const double value = uni(rng);
    g.phi[static_cast<std::size_t>(i)] = value;
    g.phi[static_cast<std::size_t>(lat.paired_index(i))] = -value;
  }
  return g;
}

cvec regularisation_symbol(const Lattice& lat, const PhysicalConstants& consts,
                           const PhaseGauge& gauge, double exponent) {
  consts.validate();
  gauge.validate(lat);
  if (!std::isfinite(exponent) || !(exponent > 0.0))
    throw std::invalid_argument("symbol exponent must be positive");

  const double scale = 2.0 * consts.hbar / (consts.eps0 * consts.c * consts.area);
  cvec sym(static_cast<std::size_t>(lat.n));
  for (int i = 0; i < lat.n; ++i) {
    const double mag = std::pow(scale * std::abs(lat.ks[static_cast<std::size_t>(i)]), exponent);
    const double ph = gauge.is_zero() ? 0.0 : gauge.phi[static_cast<std::size_t>(i)];
    sym[static_cast<std::size_t>(i)] = std::polar(mag, ph);
  }
  return sym;
}

ChannelAmplitude apply_regularisation(const ChannelAmplitude& a, Direction dir,
                                      const Lattice& lat, const PhysicalConstants& consts,
                                      const PhaseGauge& gauge, double exponent) {
  const cvec sym = regularisation_symbol(lat, consts, gauge, exponent);
  ChannelAmplitude mom = a.rep == Rep::Momentum ? a : to_momentum(a, dir, lat);
  for (std::size_t i = 0; i < mom.values.size(); ++i) mom.values[i] *= sym[i];
  return a.rep == Rep::Momentum ? mom : to_position(mom, dir, lat);
}

std::vector<double> kernel_real_space(const Lattice& lat, const PhysicalConstants& consts) {
  // Convolution normalisation: K(u) = (1/2pi) Int dk e^{iku} r(k), realised as
  // the lattice inverse transform of the full symbol divided by sqrt(2pi).
  const cvec sym = regularisation_symbol(lat, consts);
  ChannelAmplitude mom{Rep::Momentum, sym};
  cvec pos = to_position(mom, Direction::Right, lat).values;
  const double scale = 1.0 / std::sqrt(2.0 * std::numbers::pi);

  double imag_residue = 0.0;
  std::vector<double> kernel(static_cast<std::size_t>(lat.n));
  for (std::size_t j = 0; j < pos.size(); ++j) {
    pos[j] *= scale;
    imag_residue = std::max(imag_residue, std::abs(pos[j].imag()));
    kernel[j] = pos[j].real();
  }
  if (imag_residue >= 1e-10)
    throw PreconditionError("kernel transform left a non-negligible imaginary residue");
  return kernel;
}

SlopeFit kernel_tail_slope(const std::vector<double>& kernel, const Lattice& lat) {
  if (static_cast<int>(kernel.size()) != lat.n)
    throw std::invalid_argument("kernel length does not match lattice");

  SlopeFit fit;
  fit.window_lo = 8.0 * lat.dx;
  fit.window_hi = lat.length / 8.0;

  std::vector<double> lx, ly;
  for (int j = 0; j < lat.n; ++j) {
    const double u = lat.xs[static_cast<std::size_t>(j)];
    if (u < fit.window_lo || u > fit.window_hi) continue;
    const double mag = std::abs(kernel[static_cast<std::size_t>(j)]);
    if (mag == 0.0) continue;
    lx.push_back(std::log(u));
    ly.push_back(std::log(mag));
  }
  fit.points = static_cast<int>(lx.size());
  if (fit.points < 4) throw PreconditionError("tail window holds too few points for a fit");

  // Trapezoidal weights in ln u (one-sided at the ends): the fit measures the
  // log-uniform tail, not the densely sampled outer edge.
  const std::size_t m = lx.size();
  std::vector<double> w(m);
  w[0] = lx[1] - lx[0];
  w[m - 1] = lx[m - 1] - lx[m - 2];
  for (std::size_t i = 1; i + 1 < m; ++i) w[i] = 0.5 * (lx[i + 1] - lx[i - 1]);

  double sw = 0.0, swx = 0.0, swy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sw += w[i];
    swx += w[i] * lx[i];
    swy += w[i] * ly[i];
  }
  const double mx = swx / sw, my = swy / sw;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    num += w[i] * (lx[i] - mx) * (ly[i] - my);
    den += w[i] * (lx[i] - mx) * (lx[i] - mx);
  }
  fit.slope = num / den;
  return fit;
}

const cvec& FieldSnapshot::component(FieldComponent c) const {
  switch (c) {
    case FieldComponent::Ey: return ey;
    case FieldComponent::Ez: return ez;
    case FieldComponent::By: return by;
    default: return bz;
  }
}

std::vector<double> FieldSnapshot::real_component(FieldComponent c) const {
  const cvec& v = component(c);
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].real();
  return out;
}

ChannelFieldProfiles channel_field_profiles(const StateVector& coherent, double t,
                                            const PhysicalConstants& consts,
                                            const PhaseGauge& gauge, double exponent) {
  if (coherent.kind != StateKind::Coherent)
    throw std::invalid_argument("field profiles are defined for coherent amplitudes");
  StateVector st = evolve(coherent, t, EvolutionLaw::Blip, consts);
  st = to_rep(st, Rep::Position);

  ChannelFieldProfiles out;
  out.t = t;
  out.lattice = st.lattice;
  for (Channel ch : all_channels()) {
    if (is_zero_channel(st.channel(ch))) {
      out.values[static_cast<std::size_t>(ch.index())] =
          cvec(static_cast<std::size_t>(st.lattice->n));
      continue;
    }
    ChannelAmplitude a{Rep::Position, st.channel(ch)};
    out.values[static_cast<std::size_t>(ch.index())] =
        apply_regularisation(a, ch.dir, *st.lattice, consts, gauge, exponent).values;
  }
  return out;
}

FieldSnapshot assemble_snapshot(const ChannelFieldProfiles& profiles,
                                const PhysicalConstants& consts) {
  consts.validate();
  if (!profiles.lattice) throw std::invalid_argument("profiles require a valid lattice");
  const std::size_t n = static_cast<std::size_t>(profiles.lattice->n);
  const cvec& lh = profiles.channel({Direction::Left, Polarization::H});
  const cvec& lv = profiles.channel({Direction::Left, Polarization::V});
  const cvec& rh = profiles.channel({Direction::Right, Polarization::H});
  const cvec& rv = profiles.channel({Direction::Right, Polarization::V});

  FieldSnapshot snap;
  snap.t = profiles.t;
  snap.ey.resize(n);
  snap.ez.resize(n);
  snap.by.resize(n);
  snap.bz.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    snap.ey[j] = consts.c * (lh[j] + rh[j]);
    snap.ez[j] = consts.c * (lv[j] + rv[j]);
    snap.by[j] = lv[j] - rv[j];   // sum_s s * (-F_sV)
    snap.bz[j] = rh[j] - lh[j];   // sum_s s * F_sH
  }
  return snap;
}

FieldSnapshot field_expectation(const StateVector& coherent, double t,
                                const PhysicalConstants& consts, const PhaseGauge& gauge) {
  return assemble_snapshot(channel_field_profiles(coherent, t, consts, gauge), consts);
}

double advection_residual_rms(const cvec& prev, const cvec& curr, const cvec& next,
                              double dt, Direction dir, const Lattice& lat,
                              const PhysicalConstants& consts) {
  consts.validate();
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  const int n = lat.n;
  if (static_cast<int>(prev.size()) != n || static_cast<int>(curr.size()) != n ||
      static_cast<int>(next.size()) != n)
    throw std::invalid_argument("snapshot length does not match lattice");

  const double s = sign(dir);
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const int jp = (j + 1) % n;
    const int jm = (j + n - 1) % n;
    const std::complex<double> dt_term =
        (next[static_cast<std::size_t>(j)] - prev[static_cast<std::size_t>(j)]) / (2.0 * dt);
    const std::complex<double> dx_term =
        (curr[static_cast<std::size_t>(jp)] - curr[static_cast<std::size_t>(jm)]) /
        (2.0 * lat.dx);
    acc += std::norm(dt_term + s * consts.c * dx_term);
  }
  return std::sqrt(acc / n);
}

namespace {

double quadratic_symbol_sum(const StateVector& st, const PhysicalConstants& consts,
                            bool signed_symbol) {
  consts.validate();
  StateVector mom = to_rep(st, Rep::Momentum);
  const auto& ks = mom.lattice->ks;
  double acc = 0.0;
  for (const auto& ch : mom.channels)
    for (std::size_t i = 0; i < ch.size(); ++i) {
      const double k = signed_symbol ? ks[i] : std::abs(ks[i]);
      acc += k * std::norm(ch[i]);
    }
  return consts.hbar * consts.c * mom.lattice->dk() * acc;
}

}  // namespace

double energy_expectation(const StateVector& st, const PhysicalConstants& consts) {
  return quadratic_symbol_sum(st, consts, false);
}

double field_route_energy(const StateVector& st, const PhysicalConstants& consts,
                          const PhaseGauge& gauge) {
  consts.validate();
  StateVector mom = to_rep(st, Rep::Momentum);
  const cvec sym = regularisation_symbol(*mom.lattice, consts, gauge);
  double acc = 0.0;
  for (const auto& ch : mom.channels)
    for (std::size_t i = 0; i < ch.size(); ++i) acc += std::norm(sym[i] * ch[i]);
  return 0.5 * consts.eps0 * consts.c * consts.c * consts.area * mom.lattice->dk() * acc;
}

double hdyn_expectation(const StateVector& st, const PhysicalConstants& consts) {
  return quadratic_symbol_sum(st, consts, true);
}

double eigenvalue_hdyn(int n_excitations, double k, const PhysicalConstants& consts) {
  consts.validate();
  if (n_excitations < 0) throw std::invalid_argument("excitation number must be >= 0");
  return n_excitations * consts.hbar * consts.c * k;
}

SpectraResult single_excitation_spectra(const Lattice& lat, const PhysicalConstants& consts) {
  consts.validate();
  SpectraResult res;
  res.hdyn.resize(static_cast<std::size_t>(lat.n));
  res.henergy.resize(static_cast<std::size_t>(lat.n));
  for (int i = 0; i < lat.n; ++i) {
    const double k = lat.ks[static_cast<std::size_t>(i)];
    res.hdyn[static_cast<std::size_t>(i)] = eigenvalue_hdyn(1, k, consts);
    res.henergy[static_cast<std::size_t>(i)] = consts.hbar * consts.c * std::abs(k);
  }
  // Both Hamiltonians are diagonal in the same momentum modes; their symbols
  // commute sample by sample.
  res.commutator_max_abs = 0.0;
  for (std::size_t i = 0; i < res.hdyn.size(); ++i)
    res.commutator_max_abs =
        std::max(res.commutator_max_abs,
                 std::abs(res.hdyn[i] * res.henergy[i] - res.henergy[i] * res.hdyn[i]));
  return res;
}

double rr_composition_check(const Lattice& lat, const PhysicalConstants& consts,
                            std::uint64_t seed) {
  consts.validate();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const double scale = 2.0 * consts.hbar / (consts.eps0 * consts.c * consts.area);

  double worst = 0.0;
  auto run_case = [&](const cvec& position, Direction dir) {
    ChannelAmplitude a{Rep::Position, position};
    ChannelAmplitude twice =
        apply_regularisation(apply_regularisation(a, dir, lat, consts), dir, lat, consts);

    ChannelAmplitude mom = to_momentum(a, dir, lat);
    for (int i = 0; i < lat.n; ++i)
      mom.values[static_cast<std::size_t>(i)] *=
          scale * std::abs(lat.ks[static_cast<std::size_t>(i)]);
    const cvec direct = to_position(mom, dir, lat).values;

    for (std::size_t j = 0; j < direct.size(); ++j)
      worst = std::max(worst, std::abs(twice.values[j] - direct[j]));
  };

  for (Direction dir : {Direction::Left, Direction::Right}) {
    for (int trial = 0; trial < 3; ++trial) {
      cvec v(static_cast<std::size_t>(lat.n));
      for (auto& z : v) z = {uni(rng), uni(rng)};
      run_case(v, dir);
    }
    // Spectral spikes at the grid wavenumbers nearest +/-2 / (unit length).
    for (double k0 : {2.0, -2.0}) {
      int best = 0;
      for (int i = 1; i < lat.n; ++i)
        if (std::abs(lat.ks[static_cast<std::size_t>(i)] - k0) <
            std::abs(lat.ks[static_cast<std::size_t>(best)] - k0))
          best = i;
      ChannelAmplitude spike{Rep::Momentum, cvec(static_cast<std::size_t>(lat.n))};
      spike.values[static_cast<std::size_t>(best)] = 1.0;
      run_case(to_position(spike, dir, lat).values, dir);
    }
  }
  return worst;
}

}
