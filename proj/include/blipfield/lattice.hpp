#pragma once

#include <vector>

namespace blipfield {

/// Periodic position lattice of n sites on [-L/2, L/2) together with its
/// conjugate wavenumber grid, stored ascending:
///   xs[j] = -L/2 + j*dx,   ks[i] = 2*pi*m/L with m = i - n/2,
/// so ks[0] is the (negative) Nyquist wavenumber and ks[n/2] = 0.
struct Lattice {
  int n = 0;
  double length = 0.0;
  double dx = 0.0;
  std::vector<double> xs;
  std::vector<double> ks;

  double dk() const;
  int nyquist_index() const { return 0; }
  int zero_index() const { return n / 2; }
  /// Index of -ks[i]; the Nyquist sample has no partner and maps to itself.
  int paired_index(int i) const { return i == 0 ? 0 : n - i; }
  /// Largest magnitude wavenumber on the grid, |ks[0]| = pi*n/L.
  double kmax() const;
};

/// n must be an even power of two >= 8; length > 0.
Lattice build_lattice(int n, double length);

bool same_lattice(const Lattice& a, const Lattice& b);

}
