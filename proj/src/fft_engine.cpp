#include "fft_engine.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace blipfield::detail {

namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

std::mutex plan_mutex;
std::map<int, PlanPair>& plan_cache() {
  static std::map<int, PlanPair> cache;
  return cache;
}

// FFTW_UNALIGNED lets the cached plan run on any caller buffer.
PlanPair plans_for(int n) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto& cache = plan_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  fftw_complex* buf = fftw_alloc_complex(static_cast<std::size_t>(n));
  PlanPair p;
  p.fwd = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_1d(n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  cache[n] = p;
  return p;
}

}  // namespace

void fft_forward(std::complex<double>* data, int n) {
  auto* raw = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plans_for(n).fwd, raw, raw);
}

void fft_backward(std::complex<double>* data, int n) {
  auto* raw = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plans_for(n).bwd, raw, raw);
}

}
