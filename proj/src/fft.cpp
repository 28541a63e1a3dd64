#include "hardycexp/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hardycexp {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft(std::vector<cplx>& data, int sign) {
  const std::size_t n = data.size();
  if (!is_power_of_two(n)) throw std::invalid_argument("fft: size must be a power of two");
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const cplx wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cplx u = data[i + j];
        const cplx v = data[i + j + len / 2] * w;
        data[i + j] = u + v;
        data[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<cplx> dft_coefficients(const std::vector<cplx>& samples) {
  std::vector<cplx> out = samples;
  fft(out, -1);
  const double inv = 1.0 / static_cast<double>(out.size());
  for (auto& c : out) c *= inv;
  return out;
}

std::vector<cplx> dft_synthesis(const std::vector<cplx>& coeffs) {
  std::vector<cplx> out = coeffs;
  fft(out, +1);
  return out;
}

}  // namespace hardycexp
