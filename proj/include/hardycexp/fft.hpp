#ifndef HARDYCEXP_FFT_HPP
#define HARDYCEXP_FFT_HPP

#include <complex>
#include <vector>

namespace hardycexp {

using cplx = std::complex<double>;

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

// In-place radix-2 FFT; n must be a power of two.
// sign = -1: forward (matches sum_j x_j e^{-2pi i jk/n}), sign = +1: inverse
// without the 1/n normalization.
void fft(std::vector<cplx>& data, int sign);

// Forward DFT divided by n, i.e. discrete Fourier coefficients.
std::vector<cplx> dft_coefficients(const std::vector<cplx>& samples);

// Samples of sum_k c[k] e^{2pi i jk/n} where c is indexed mod n.
std::vector<cplx> dft_synthesis(const std::vector<cplx>& coeffs);

}  // namespace hardycexp

#endif
