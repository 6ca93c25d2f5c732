#pragma once

#include <memory>
#include <random>

#include "blipfield/states.hpp"

namespace testhelp {

inline std::shared_ptr<const blipfield::Lattice> lat(int n, double length) {
  return std::make_shared<blipfield::Lattice>(blipfield::build_lattice(n, length));
}

inline blipfield::cvec random_cvec(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  blipfield::cvec v(static_cast<std::size_t>(n));
  for (auto& z : v) z = {uni(rng), uni(rng)};
  return v;
}

// Random normalized state with all four channels occupied.
inline blipfield::StateVector random_state(std::shared_ptr<const blipfield::Lattice> lattice,
                                           std::uint64_t seed,
                                           blipfield::Rep rep = blipfield::Rep::Position) {
  std::mt19937_64 rng(seed);
  auto st = blipfield::zero_state(lattice, blipfield::StateKind::SingleExcitation, rep);
  for (auto& ch : st.channels) ch = random_cvec(lattice->n, rng);
  return blipfield::normalized(st);
}

inline double max_abs_diff(const blipfield::cvec& a, const blipfield::cvec& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline double max_abs_diff(const blipfield::StateVector& a, const blipfield::StateVector& b) {
  double worst = 0.0;
  for (int c = 0; c < 4; ++c) worst = std::max(worst, max_abs_diff(a.channels[c], b.channels[c]));
  return worst;
}

}
