#pragma once

#include <complex>

namespace blipfield::detail {

// In-place unnormalised DFTs in FFTW's native frequency order. Thread-safe;
// plans are cached per size.
void fft_forward(std::complex<double>* data, int n);   // sum_j f_j e^{-2*pi*i*j*m/n}
void fft_backward(std::complex<double>* data, int n);  // sum_m g_m e^{+2*pi*i*j*m/n}

}
