#include "blipfield/transforms.hpp"

#include <numbers>
#include <stdexcept>

#include "fft_engine.hpp"

namespace blipfield {

namespace {

constexpr double inv_sqrt_2pi = 0.3989422804014326779;  // (2*pi)^{-1/2}

void check_input(const ChannelAmplitude& a, Rep want, const Lattice& lat) {
  if (a.rep != want) throw std::invalid_argument("amplitude is in the wrong representation");
  if (static_cast<int>(a.values.size()) != lat.n)
    throw std::invalid_argument("amplitude length does not match lattice");
}

// Ascending-k result of the right-moving transform. The (-1)^m factor is the
// e^{+i k_m L/2} phase that shifts FFTW's j=0 origin to x = -L/2.
cvec forward_right(const cvec& position, const Lattice& lat) {
  const int n = lat.n;
  cvec buf = position;
  detail::fft_forward(buf.data(), n);
  const double scale = lat.dx * inv_sqrt_2pi;
  cvec out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int m = i - n / 2;
    const double parity = (m & 1) ? -1.0 : 1.0;
    out[i] = scale * parity * buf[(m + n) % n];
  }
  return out;
}

cvec backward_right(const cvec& momentum, const Lattice& lat) {
  const int n = lat.n;
  cvec buf(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int m = i - n / 2;
    const double parity = (m & 1) ? -1.0 : 1.0;
    buf[(m + n) % n] = parity * momentum[i];
  }
  detail::fft_backward(buf.data(), n);
  const double scale = lat.dk() * inv_sqrt_2pi;
  for (auto& v : buf) v *= scale;
  return buf;
}

// k -> -k on the ascending grid; the Nyquist sample is its own partner.
cvec reverse_k(const cvec& v, const Lattice& lat) {
  const int n = lat.n;
  cvec out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = v[static_cast<std::size_t>(lat.paired_index(i))];
  return out;
}

}  // namespace

ChannelAmplitude to_momentum(const ChannelAmplitude& a, Direction dir, const Lattice& lat) {
  check_input(a, Rep::Position, lat);
  ChannelAmplitude out;
  out.rep = Rep::Momentum;
  out.values = forward_right(a.values, lat);
  if (dir == Direction::Left) out.values = reverse_k(out.values, lat);
  return out;
}

ChannelAmplitude to_position(const ChannelAmplitude& a, Direction dir, const Lattice& lat) {
  check_input(a, Rep::Momentum, lat);
  ChannelAmplitude out;
  out.rep = Rep::Position;
  out.values = dir == Direction::Left ? backward_right(reverse_k(a.values, lat), lat)
                                      : backward_right(a.values, lat);
  return out;
}

}
