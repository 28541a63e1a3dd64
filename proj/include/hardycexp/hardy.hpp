#ifndef HARDYCEXP_HARDY_HPP
#define HARDYCEXP_HARDY_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace hardycexp {

using cplx = std::complex<double>;

// Uniform grid of n = 2^m nodes e^{2pi i j/n} on the circle, n >= 8.
struct CircleGrid {
  std::size_t n;

  explicit CircleGrid(std::size_t n);
  double theta(std::size_t j) const;
  cplx node(std::size_t j) const;
};

struct BoundarySamples {
  CircleGrid grid;
  std::vector<cplx> values;

  BoundarySamples(CircleGrid g, std::vector<cplx> v);

  // Band-limited interpolant at an arbitrary angle; exact (to roundoff)
  // for trigonometric polynomials of degree < n/2. Evaluates the full
  // Fourier series, so intended for small grids and spot checks.
  cplx interpolate_bandlimited(double theta) const;

  // Local 8-point Lagrange interpolation; used for large grids where the
  // full series is too expensive per point.
  cplx interpolate_local(double theta) const;

  std::string to_csv() const;  // rows: index, theta, re, im
};

// Analytic polynomial c_0 + c_1 z + ... (trailing zeros trimmed).
struct AnalyticPoly {
  std::vector<cplx> coeffs;

  AnalyticPoly() = default;
  explicit AnalyticPoly(std::vector<cplx> c);

  std::size_t deg() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  cplx eval(cplx z) const;
  BoundarySamples sample(const CircleGrid& grid) const;
};

// Sparse polynomial on the d-torus, keyed by multi-index.
struct MultiPoly {
  std::size_t d;
  std::map<std::vector<unsigned>, cplx> terms;

  explicit MultiPoly(std::size_t dim);

  void set(const std::vector<unsigned>& alpha, cplx c);  // erases on c == 0
  cplx eval(const std::vector<cplx>& z) const;
  unsigned max_degree(std::size_t coordinate) const;

  std::string to_json() const;
  static MultiPoly from_json(const std::string& text);
};

double quasi_norm(const BoundarySamples& f, double p);
double quasi_norm(const AnalyticPoly& f, double p);

// Coefficients k_min..k_max; requires grid n > 2*max(|k_min|,|k_max|).
std::vector<cplx> fourier_coefficients(const BoundarySamples& f, long k_min, long k_max);

// Boundary values of the outer function exp(u + i * conj(u)) with the
// prescribed real log-modulus u. Rejects non-real input.
BoundarySamples outer_function(const BoundarySamples& log_modulus);

// Smoothstep arc profile: log t inside |theta - center| <= half_width - delta,
// 0 outside half_width + delta, cubic smoothstep in between.
BoundarySamples smoothed_arc_log_modulus(const CircleGrid& grid, double center,
                                         double half_width, double t, double delta);

double torus_quasi_norm(const MultiPoly& f, double p, std::size_t nodes_per_dim);

AnalyticPoly substitute_power(const AnalyticPoly& f, unsigned k);

}  // namespace hardycexp

#endif
