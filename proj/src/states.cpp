#include "blipfield/states.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "blipfield/errors.hpp"

namespace blipfield {

namespace {

bool is_zero_vec(const cvec& v) {
  return std::all_of(v.begin(), v.end(), [](auto z) { return z == std::complex<double>{}; });
}

double max_abs(const cvec& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

void check_lattice(const std::shared_ptr<const Lattice>& lat) {
  if (!lat || lat->n == 0) throw std::invalid_argument("state requires a valid lattice");
}

// Raw (pre-regularity-surgery) channel profile of a packet spec.
cvec raw_profile(const PacketSpec& spec, const Lattice& lat) {
  const int n = lat.n;
  cvec values(static_cast<std::size_t>(n));
  const int s = sign(spec.channel.dir);
  const std::complex<double> global = std::polar(1.0, spec.phase);

  switch (spec.shape) {
    case PacketShape::Gaussian: {
      if (!(spec.width > 0.0)) throw std::invalid_argument("gaussian width must be positive");
      // Envelope exp(-(x-x0)^2 / 4 sigma^2): the intensity |amp|^2 then has
      // standard deviation sigma. Edge leakage is checked analytically.
      const double lo = std::exp(-std::pow(-0.5 * lat.length - spec.center, 2) /
                                 (4.0 * spec.width * spec.width));
      const double hi = std::exp(-std::pow(0.5 * lat.length - spec.center, 2) /
                                 (4.0 * spec.width * spec.width));
      if (std::max(lo, hi) >= 1e-12)
        throw PreconditionError("packet envelope does not vanish at the domain edge");
      for (int j = 0; j < n; ++j) {
        const double x = lat.xs[j];
        const double env = std::exp(-std::pow(x - spec.center, 2) / (4.0 * spec.width * spec.width));
        values[j] = global * env * std::polar(1.0, s * spec.carrier * x);
      }
      break;
    }
    case PacketShape::Rectangular: {
      if (!(spec.width > 0.0)) throw std::invalid_argument("rectangular width must be positive");
      for (int j = 0; j < n; ++j) {
        const double x = lat.xs[j];
        if (std::abs(x - spec.center) <= 0.5 * spec.width)
          values[j] = global * std::polar(1.0, s * spec.carrier * x);
      }
      break;
    }
    case PacketShape::Custom: {
      if (static_cast<int>(spec.samples.size()) != n)
        throw std::invalid_argument("custom samples length does not match lattice");
      for (int j = 0; j < n; ++j)
        values[j] = global * spec.samples[j] * std::polar(1.0, s * spec.carrier * lat.xs[j]);
      break;
    }
  }

  const double peak = max_abs(values);
  if (peak == 0.0) throw std::invalid_argument("packet profile is identically zero");
  if (spec.shape != PacketShape::Gaussian) {
    if (std::max(std::abs(values.front()), std::abs(values.back())) >= 1e-12 * peak)
      throw PreconditionError("packet envelope does not vanish at the domain edge");
  }
  return values;
}

}  // namespace

StateVector zero_state(std::shared_ptr<const Lattice> lat, StateKind kind, Rep rep) {
  check_lattice(lat);
  StateVector st;
  st.kind = kind;
  st.rep = rep;
  st.lattice = std::move(lat);
  for (auto& ch : st.channels) ch.assign(static_cast<std::size_t>(st.lattice->n), {});
  return st;
}

StateVector make_packet(const PacketSpec& spec, std::shared_ptr<const Lattice> lat,
                        StateKind kind) {
  check_lattice(lat);
  StateVector st = zero_state(lat, kind, Rep::Position);
  ChannelAmplitude amp{Rep::Position, raw_profile(spec, *lat)};

  // Zero the Nyquist amplitude: packets live strictly inside the band where
  // the signed-k conventions are unambiguous.
  ChannelAmplitude tilde = to_momentum(amp, spec.channel.dir, *lat);
  tilde.values[static_cast<std::size_t>(lat->nyquist_index())] = {};
  amp = to_position(tilde, spec.channel.dir, *lat);

  st.channel(spec.channel) = std::move(amp.values);
  if (kind == StateKind::SingleExcitation) return normalized(st);

  for (auto& z : st.channel(spec.channel)) z *= spec.amplitude;
  return st;
}

StateVector blip_basis_proxy(int site, Channel ch, std::shared_ptr<const Lattice> lat) {
  check_lattice(lat);
  if (site < 0 || site >= lat->n) throw std::invalid_argument("site index out of range");
  StateVector st = zero_state(lat, StateKind::SingleExcitation, Rep::Position);
  st.channel(ch)[static_cast<std::size_t>(site)] = 1.0 / std::sqrt(lat->dx);
  return st;
}

std::complex<double> inner_product(const StateVector& a, const StateVector& b) {
  if (a.kind != StateKind::SingleExcitation || b.kind != StateKind::SingleExcitation)
    throw std::invalid_argument("inner product is defined for single-excitation states");
  if (a.rep != b.rep) throw std::invalid_argument("states are in different representations");
  check_lattice(a.lattice);
  check_lattice(b.lattice);
  if (!same_lattice(*a.lattice, *b.lattice))
    throw std::invalid_argument("states live on different lattices");

  const double w = a.rep == Rep::Position ? a.lattice->dx : a.lattice->dk();
  std::complex<double> acc = 0.0;
  for (int c = 0; c < 4; ++c)
    for (std::size_t i = 0; i < a.channels[c].size(); ++i)
      acc += std::conj(a.channels[c][i]) * b.channels[c][i];
  return w * acc;
}

double norm(const StateVector& st) {
  check_lattice(st.lattice);
  const double w = st.rep == Rep::Position ? st.lattice->dx : st.lattice->dk();
  double acc = 0.0;
  for (const auto& ch : st.channels)
    for (const auto& z : ch) acc += std::norm(z);
  return std::sqrt(w * acc);
}

StateVector to_rep(const StateVector& st, Rep rep) {
  check_lattice(st.lattice);
  if (st.rep == rep) return st;
  StateVector out = st;
  out.rep = rep;
  for (Channel ch : all_channels()) {
    ChannelAmplitude a{st.rep, st.channel(ch)};
    out.channel(ch) = rep == Rep::Momentum ? to_momentum(a, ch.dir, *st.lattice).values
                                           : to_position(a, ch.dir, *st.lattice).values;
  }
  return out;
}

StateVector superpose(const StateVector& a, const StateVector& b) {
  check_lattice(a.lattice);
  check_lattice(b.lattice);
  if (a.kind != b.kind) throw std::invalid_argument("cannot superpose states of different kinds");
  if (a.rep != b.rep) throw std::invalid_argument("states are in different representations");
  if (!same_lattice(*a.lattice, *b.lattice))
    throw std::invalid_argument("states live on different lattices");
  StateVector out = a;
  for (int c = 0; c < 4; ++c)
    for (std::size_t i = 0; i < out.channels[c].size(); ++i)
      out.channels[c][i] += b.channels[c][i];
  return out;
}

StateVector normalized(const StateVector& st) {
  const double nrm = norm(st);
  if (nrm == 0.0) throw std::invalid_argument("cannot normalise a zero state");
  StateVector out = st;
  for (auto& ch : out.channels)
    for (auto& z : ch) z /= nrm;
  return out;
}

PositiveProjection project_positive_wavenumbers(const StateVector& st) {
  StateVector mom = to_rep(st, Rep::Momentum);
  const double before = norm(mom);
  for (auto& ch : mom.channels)
    for (int i = 0; i <= mom.lattice->zero_index(); ++i) ch[static_cast<std::size_t>(i)] = {};
  const double after = norm(mom);
  PositiveProjection res;
  res.discarded_fraction =
      before == 0.0 ? 0.0 : 1.0 - (after * after) / (before * before);
  res.state = std::move(mom);
  return res;
}

cvec load_samples_csv(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open samples file: " + path);
  cvec out;
  out.reserve(static_cast<std::size_t>(n));
  std::string line;
  bool first_data = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string re_s, im_s;
    std::getline(ss, re_s, ',');
    std::getline(ss, im_s, ',');
    char* end = nullptr;
    const double re = std::strtod(re_s.c_str(), &end);
    if (end == re_s.c_str()) {
      if (first_data) { first_data = false; continue; }  // header row
      throw std::invalid_argument("malformed samples row: " + line);
    }
    first_data = false;
    double im = 0.0;
    if (!im_s.empty()) {
      end = nullptr;
      im = std::strtod(im_s.c_str(), &end);
      if (end == im_s.c_str()) throw std::invalid_argument("malformed samples row: " + line);
    }
    out.emplace_back(re, im);
  }
  if (static_cast<int>(out.size()) != n)
    throw std::invalid_argument("samples file holds " + std::to_string(out.size()) +
                                " rows, expected " + std::to_string(n));
  return out;
}

bool is_zero_channel(const cvec& v) { return is_zero_vec(v); }

}
