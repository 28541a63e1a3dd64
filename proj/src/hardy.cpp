#include "hardycexp/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hardycexp/fft.hpp"
#include "json.hpp"

namespace hardycexp {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double mean_abs_pow(const std::vector<cplx>& v, double p) {
  double s = 0.0;
  for (const cplx& x : v) s += std::pow(std::abs(x), p);
  return s / static_cast<double>(v.size());
}
}  // namespace

CircleGrid::CircleGrid(std::size_t n_) : n(n_) {
  if (n < 8 || !is_power_of_two(n))
    throw std::invalid_argument("CircleGrid: n must be a power of two, at least 8");
}

double CircleGrid::theta(std::size_t j) const { return kTwoPi * static_cast<double>(j) / static_cast<double>(n); }

cplx CircleGrid::node(std::size_t j) const { return std::polar(1.0, theta(j)); }

BoundarySamples::BoundarySamples(CircleGrid g, std::vector<cplx> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != grid.n)
    throw std::invalid_argument("BoundarySamples: value count does not match grid");
}

cplx BoundarySamples::interpolate_bandlimited(double theta) const {
  const std::size_t n = grid.n;
  const auto coeffs = dft_coefficients(values);
  cplx out(0.0, 0.0);
  const cplx e = std::polar(1.0, theta);
  // frequencies -n/2+1 .. n/2-1; split the Nyquist bin symmetrically
  cplx pos(1.0, 0.0), neg(1.0, 0.0);
  out += coeffs[0];
  for (std::size_t k = 1; k < n / 2; ++k) {
    pos *= e;
    neg *= std::conj(e);
    out += coeffs[k] * pos + coeffs[n - k] * neg;
  }
  out += coeffs[n / 2] * 0.5 * (pos * e + neg * std::conj(e));
  return out;
}

cplx BoundarySamples::interpolate_local(double theta) const {
  constexpr int m = 8;
  const std::size_t n = grid.n;
  const double h = kTwoPi / static_cast<double>(n);
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  const long j0 = static_cast<long>(std::floor(t / h));
  const double x = t / h - static_cast<double>(j0);  // in [0,1)
  cplx out(0.0, 0.0);
  for (int a = 0; a < m; ++a) {
    const int oa = a - m / 2 + 1;
    double w = 1.0;
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const int ob = b - m / 2 + 1;
      w *= (x - ob) / static_cast<double>(oa - ob);
    }
    const std::size_t idx = static_cast<std::size_t>(((j0 + oa) % static_cast<long>(n) + n) % n);
    out += w * values[idx];
  }
  return out;
}

std::string BoundarySamples::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "index,theta,re,im\n";
  for (std::size_t j = 0; j < grid.n; ++j)
    os << j << ',' << grid.theta(j) << ',' << values[j].real() << ',' << values[j].imag() << '\n';
  return os.str();
}

AnalyticPoly::AnalyticPoly(std::vector<cplx> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == cplx(0.0, 0.0)) coeffs.pop_back();
}

cplx AnalyticPoly::eval(cplx z) const {
  cplx out(0.0, 0.0);
  for (std::size_t i = coeffs.size(); i-- > 0;) out = out * z + coeffs[i];
  return out;
}

BoundarySamples AnalyticPoly::sample(const CircleGrid& grid) const {
  std::vector<cplx> c(grid.n, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i % grid.n] += coeffs[i];
  return BoundarySamples(grid, dft_synthesis(c));
}

MultiPoly::MultiPoly(std::size_t dim) : d(dim) {
  if (d == 0) throw std::invalid_argument("MultiPoly: dimension must be positive");
}

void MultiPoly::set(const std::vector<unsigned>& alpha, cplx c) {
  if (alpha.size() != d) throw std::invalid_argument("MultiPoly: multi-index length mismatch");
  if (c == cplx(0.0, 0.0))
    terms.erase(alpha);
  else
    terms[alpha] = c;
}

cplx MultiPoly::eval(const std::vector<cplx>& z) const {
  if (z.size() != d) throw std::invalid_argument("MultiPoly::eval: point dimension mismatch");
  cplx out(0.0, 0.0);
  for (const auto& [alpha, c] : terms) {
    cplx t = c;
    for (std::size_t j = 0; j < d; ++j)
      for (unsigned e = 0; e < alpha[j]; ++e) t *= z[j];
    out += t;
  }
  return out;
}

unsigned MultiPoly::max_degree(std::size_t coordinate) const {
  unsigned m = 0;
  for (const auto& [alpha, c] : terms) m = std::max(m, alpha[coordinate]);
  return m;
}

std::string MultiPoly::to_json() const {
  nlohmann::json j;
  j["d"] = d;
  j["terms"] = nlohmann::json::array();
  for (const auto& [alpha, c] : terms)
    j["terms"].push_back({{"alpha", alpha}, {"c", {c.real(), c.imag()}}});
  return j.dump();
}

MultiPoly MultiPoly::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  MultiPoly out(j.at("d").get<std::size_t>());
  for (const auto& t : j.at("terms")) {
    const auto alpha = t.at("alpha").get<std::vector<unsigned>>();
    const auto& c = t.at("c");
    out.set(alpha, cplx(c.at(0).get<double>(), c.at(1).get<double>()));
  }
  return out;
}

double quasi_norm(const BoundarySamples& f, double p) {
  if (p <= 0) throw std::invalid_argument("quasi_norm: p must be positive");
  return std::pow(mean_abs_pow(f.values, p), 1.0 / p);
}

namespace {

// Default grid floor for quasi-norms; overridable via HARDYCEXP_GRID_N
// (rounded up to a power of two, floor 16).
std::size_t default_grid_floor() {
  static const std::size_t n = [] {
    if (const char* env = std::getenv("HARDYCEXP_GRID_N")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v >= 16)
        return next_power_of_two(static_cast<std::size_t>(v));
    }
    return static_cast<std::size_t>(16384);
  }();
  return n;
}

}  // namespace

double quasi_norm(const AnalyticPoly& f, double p) {
  if (p <= 0) throw std::invalid_argument("quasi_norm: p must be positive");
  const std::size_t n = next_power_of_two(std::max(8 * (f.deg() + 1), default_grid_floor()));
  return quasi_norm(f.sample(CircleGrid(n)), p);
}

std::vector<cplx> fourier_coefficients(const BoundarySamples& f, long k_min, long k_max) {
  if (k_min > k_max) throw std::invalid_argument("fourier_coefficients: empty band");
  const long n = static_cast<long>(f.grid.n);
  if (std::max(std::labs(k_min), std::labs(k_max)) * 2 >= n)
    throw std::invalid_argument("fourier_coefficients: band too wide for grid");
  const auto c = dft_coefficients(f.values);
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(k_max - k_min + 1));
  for (long k = k_min; k <= k_max; ++k) out.push_back(c[static_cast<std::size_t>((k % n + n) % n)]);
  return out;
}

BoundarySamples outer_function(const BoundarySamples& log_modulus) {
  const std::size_t n = log_modulus.grid.n;
  for (const cplx& v : log_modulus.values)
    if (std::abs(v.imag()) > 1e-12)
      throw std::invalid_argument("outer_function: log-modulus must be real");
  auto u_hat = dft_coefficients(log_modulus.values);
  // conjugate function: multiplier -i sign(k), Nyquist and mean bins zeroed
  std::vector<cplx> v_hat(n, cplx(0.0, 0.0));
  for (std::size_t k = 1; k < n / 2; ++k) {
    v_hat[k] = cplx(0.0, -1.0) * u_hat[k];
    v_hat[n - k] = cplx(0.0, 1.0) * u_hat[n - k];
  }
  const auto v = dft_synthesis(v_hat);
  std::vector<cplx> out(n);
  for (std::size_t j = 0; j < n; ++j)
    out[j] = std::exp(cplx(log_modulus.values[j].real(), v[j].real()));
  return BoundarySamples(log_modulus.grid, std::move(out));
}

BoundarySamples smoothed_arc_log_modulus(const CircleGrid& grid, double center,
                                         double half_width, double t, double delta) {
  if (t < 1.0) throw std::invalid_argument("smoothed_arc_log_modulus: t must be >= 1");
  if (!(delta < half_width) || !(half_width + delta < std::numbers::pi))
    throw std::invalid_argument("smoothed_arc_log_modulus: invalid arc geometry");
  const double logt = std::log(t);
  const double inner = half_width - delta;
  const double outer = half_width + delta;
  std::vector<cplx> vals(grid.n);
  for (std::size_t j = 0; j < grid.n; ++j) {
    double d = std::fmod(std::abs(grid.theta(j) - center), kTwoPi);
    d = std::min(d, kTwoPi - d);
    double u;
    if (d <= inner) {
      u = logt;
    } else if (d >= outer) {
      u = 0.0;
    } else {
      const double s = (outer - d) / (2.0 * delta);
      u = logt * (3.0 * s * s - 2.0 * s * s * s);
    }
    vals[j] = cplx(u, 0.0);
  }
  return BoundarySamples(grid, std::move(vals));
}

double torus_quasi_norm(const MultiPoly& f, double p, std::size_t nodes_per_dim) {
  if (p <= 0) throw std::invalid_argument("torus_quasi_norm: p must be positive");
  if (f.d > 3)
    throw std::invalid_argument(
        "torus_quasi_norm: dimension exceeds 3; use the symbolic multiplier classification");
  for (std::size_t j = 0; j < f.d; ++j)
    if (nodes_per_dim < 4 * (f.max_degree(j) + 1))
      throw std::invalid_argument("torus_quasi_norm: nodes_per_dim too small for the degree");

  const std::size_t n = nodes_per_dim;
  // dense coefficient tensor, then separable evaluation one coordinate at a time
  std::vector<std::size_t> dims(f.d);
  std::size_t total = 1;
  for (std::size_t j = 0; j < f.d; ++j) {
    dims[j] = f.max_degree(j) + 1;
    total *= dims[j];
  }
  std::vector<cplx> tensor(total, cplx(0.0, 0.0));
  for (const auto& [alpha, c] : f.terms) {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < f.d; ++j) idx = idx * dims[j] + alpha[j];
    tensor[idx] = c;
  }
  // contract the trailing coordinate repeatedly: values over (prefix, node)
  std::vector<cplx> cur = std::move(tensor);
  std::vector<std::size_t> shape = dims;  // trailing entries become n after contraction
  for (std::size_t j = f.d; j-- > 0;) {
    std::size_t lead = 1, trail = 1;
    for (std::size_t a = 0; a < j; ++a) lead *= shape[a];
    for (std::size_t a = j + 1; a < shape.size(); ++a) trail *= shape[a];
    const std::size_t degp1 = shape[j];
    std::vector<cplx> next(lead * n * trail);
    for (std::size_t L = 0; L < lead; ++L) {
      for (std::size_t q = 0; q < n; ++q) {
        const cplx z = std::polar(1.0, kTwoPi * static_cast<double>(q) / static_cast<double>(n));
        for (std::size_t T = 0; T < trail; ++T) {
          cplx acc(0.0, 0.0);
          for (std::size_t e = degp1; e-- > 0;)
            acc = acc * z + cur[(L * degp1 + e) * trail + T];
          next[(L * n + q) * trail + T] = acc;
        }
      }
    }
    cur = std::move(next);
    shape[j] = n;
  }
  return std::pow(mean_abs_pow(cur, p), 1.0 / p);
}

AnalyticPoly substitute_power(const AnalyticPoly& f, unsigned k) {
  if (k == 0) throw std::invalid_argument("substitute_power: k must be >= 1");
  if (f.coeffs.empty()) return f;
  std::vector<cplx> out(f.deg() * static_cast<std::size_t>(k) + 1, cplx(0.0, 0.0));
  for (std::size_t j = 0; j < f.coeffs.size(); ++j) out[j * k] = f.coeffs[j];
  return AnalyticPoly(std::move(out));
}

}  // namespace hardycexp
