#include "hardycexp/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"

namespace hardycexp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Horner evaluation of p and p' for coefficients c_0..c_k.
std::pair<cplx, cplx> horner2(const std::vector<cplx>& c, cplx w) {
  cplx p(0.0, 0.0), dp(0.0, 0.0);
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * w + p;
    p = p * w + c[i];
  }
  return {p, dp};
}

std::vector<cplx> poly_mul_linear(std::vector<cplx> p, cplx b0, cplx b1) {
  // multiply p by (b0 + b1 w)
  std::vector<cplx> out(p.size() + 1, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] += p[i] * b0;
    out[i + 1] += p[i] * b1;
  }
  return out;
}

}  // namespace

UnitCirclePoint::UnitCirclePoint(cplx v) : value(v) {
  const double r = std::abs(v);
  if (std::abs(r - 1.0) > 1e-10)
    throw std::invalid_argument("UnitCirclePoint: modulus deviates from 1 by more than 1e-10");
  value /= r;
}

double UnitCirclePoint::arg() const {
  double a = std::arg(value);
  if (a < 0) a += kTwoPi;
  return a;
}

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, cplx rotation, double zero_modulus_cap)
    : zeros_(std::move(zeros)), rotation_(rotation) {
  if (zeros_.empty()) throw std::invalid_argument("BlaschkeProduct: degree must be at least 1");
  for (const cplx& a : zeros_) {
    if (std::abs(a) >= zero_modulus_cap)
      throw std::invalid_argument("BlaschkeProduct: zero modulus exceeds cap " +
                                  std::to_string(zero_modulus_cap));
  }
  const double r = std::abs(rotation_);
  if (std::abs(r - 1.0) > 1e-12)
    throw std::invalid_argument("BlaschkeProduct: rotation is not unimodular");
  rotation_ /= r;
}

bool BlaschkeProduct::vanishes_at_origin() const {
  return std::any_of(zeros_.begin(), zeros_.end(), [](cplx a) { return a == cplx(0.0, 0.0); });
}

cplx BlaschkeProduct::evaluate(cplx w) const {
  cplx out = rotation_;
  for (const cplx& a : zeros_) {
    const cplx den = 1.0 - std::conj(a) * w;
    if (std::abs(den) < 1e-14)
      throw std::domain_error("BlaschkeProduct::evaluate: too close to a pole");
    out *= (w - a) / den;
  }
  return out;
}

double BlaschkeProduct::boundary_derivative_modulus(double theta) const {
  const cplx w = std::polar(1.0, theta);
  double sum = 0.0;
  for (const cplx& a : zeros_) {
    const double d2 = std::norm(1.0 - std::conj(a) * w);
    sum += (1.0 - std::norm(a)) / d2;
  }
  return sum;
}

std::vector<UnitCirclePoint> BlaschkeProduct::preimages(const UnitCirclePoint& z,
                                                        double* min_pairwise_distance) const {
  const std::size_t k = degree();
  // eta(w) = z  <=>  c prod (w - a_j) - z prod (1 - conj(a_j) w) = 0.
  std::vector<cplx> num{cplx(1.0, 0.0)};
  std::vector<cplx> den{cplx(1.0, 0.0)};
  for (const cplx& a : zeros_) {
    num = poly_mul_linear(std::move(num), -a, cplx(1.0, 0.0));
    den = poly_mul_linear(std::move(den), cplx(1.0, 0.0), -std::conj(a));
  }
  std::vector<cplx> poly(k + 1);
  for (std::size_t i = 0; i <= k; ++i) poly[i] = rotation_ * num[i] - z.value * den[i];

  double scale = 0.0;
  for (const cplx& c : poly) scale = std::max(scale, std::abs(c));

  // Aberth-Ehrlich simultaneous iteration from perturbed equispaced angles
  // on the unit circle (all roots lie on the circle).
  std::vector<cplx> roots(k);
  const double offset = 0.5 * z.arg() / static_cast<double>(k) + 0.2347;
  for (std::size_t i = 0; i < k; ++i)
    roots[i] = std::polar(1.0, kTwoPi * (static_cast<double>(i) + offset) / static_cast<double>(k));

  const int max_iter = 200;
  bool converged = false;
  for (int iter = 0; iter < max_iter && !converged; ++iter) {
    converged = true;
    for (std::size_t i = 0; i < k; ++i) {
      auto [p, dp] = horner2(poly, roots[i]);
      if (std::abs(p) < 1e-15 * scale) continue;
      const cplx ratio = p / dp;
      cplx sum(0.0, 0.0);
      for (std::size_t j = 0; j < k; ++j)
        if (j != i) sum += 1.0 / (roots[i] - roots[j]);
      const cplx step = ratio / (1.0 - ratio * sum);
      roots[i] -= step;
      if (std::abs(step) > 1e-14) converged = false;
    }
  }
  // Newton polish
  for (std::size_t i = 0; i < k; ++i) {
    for (int it = 0; it < 3; ++it) {
      auto [p, dp] = horner2(poly, roots[i]);
      if (std::abs(dp) == 0.0) break;
      roots[i] -= p / dp;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (std::abs(evaluate(roots[i] / std::abs(roots[i])) - z.value) > 1e-10)
      throw ConvergenceError("preimages: root residual exceeds tolerance");
    if (std::abs(std::abs(roots[i]) - 1.0) > 1e-10)
      throw ConvergenceError("preimages: root strayed from the unit circle");
  }

  std::vector<UnitCirclePoint> out;
  out.reserve(k);
  for (const cplx& r : roots) out.emplace_back(r);
  std::sort(out.begin(), out.end(), [](const UnitCirclePoint& a, const UnitCirclePoint& b) {
    const double aa = a.arg(), bb = b.arg();
    if (aa != bb) return aa < bb;
    return a.value.real() < b.value.real();
  });
  if (min_pairwise_distance) {
    double dmin = 1e300;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        dmin = std::min(dmin, std::abs(out[i].value - out[j].value));
    *min_pairwise_distance = (k > 1) ? dmin : 1e300;
  }
  return out;
}

double BlaschkeProduct::extremize_derivative(bool maximize, double* arg_out) const {
  const int n = 4096;
  const double sgn = maximize ? 1.0 : -1.0;
  double best = -1e300;
  int best_i = 0;
  for (int i = 0; i < n; ++i) {
    const double th = kTwoPi * i / n;
    const double v = sgn * boundary_derivative_modulus(th);
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  // golden-section refinement around the best sample
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = kTwoPi * (best_i - 1) / n;
  double b = kTwoPi * (best_i + 1) / n;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = sgn * boundary_derivative_modulus(x1);
  double f2 = sgn * boundary_derivative_modulus(x2);
  while (b - a > 1e-12) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = sgn * boundary_derivative_modulus(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = sgn * boundary_derivative_modulus(x1);
    }
  }
  const double xm = 0.5 * (a + b);
  if (arg_out) *arg_out = xm - kTwoPi * std::floor(xm / kTwoPi);
  return boundary_derivative_modulus(xm);
}

double BlaschkeProduct::derivative_sup() const { return extremize_derivative(true); }

double BlaschkeProduct::derivative_inf() const { return extremize_derivative(false); }

double BlaschkeProduct::derivative_argmax() const {
  double th = 0.0;
  extremize_derivative(true, &th);
  return th;
}

std::pair<double, double> BlaschkeProduct::derivative_sandwich_bounds() const {
  double lo = 0.0, hi = 0.0;
  for (const cplx& a : zeros_) {
    const double r = std::abs(a);
    lo += (1.0 - r) / (1.0 + r);
    hi += (1.0 + r) / (1.0 - r);
  }
  return {lo, hi};
}

std::string BlaschkeProduct::to_json() const {
  nlohmann::json j;
  j["zeros"] = nlohmann::json::array();
  for (const cplx& a : zeros_) j["zeros"].push_back({a.real(), a.imag()});
  j["rotation"] = {rotation_.real(), rotation_.imag()};
  return j.dump();
}

BlaschkeProduct BlaschkeProduct::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<cplx> zeros;
  for (const auto& z : j.at("zeros")) zeros.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
  const auto& r = j.at("rotation");
  return BlaschkeProduct(std::move(zeros), cplx(r.at(0).get<double>(), r.at(1).get<double>()));
}

}  // namespace hardycexp
