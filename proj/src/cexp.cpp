#include "hardycexp/cexp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "hardycexp/fft.hpp"

namespace hardycexp {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Grids at or below this size use the exact band-limited interpolant;
// larger grids fall back to local Lagrange interpolation.
constexpr std::size_t kBandlimitedCutoff = 4096;

cplx sample_eval(const BoundarySamples& f, double theta) {
  return f.grid.n <= kBandlimitedCutoff ? f.interpolate_bandlimited(theta)
                                        : f.interpolate_local(theta);
}

double l2_norm(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const cplx& x : v) s += std::norm(x);
  return std::sqrt(s);
}
}  // namespace

CexpOperator::CexpOperator(BlaschkeProduct product) : product_(std::move(product)) {
  if (!product_.vanishes_at_origin())
    throw std::invalid_argument("CexpOperator: eta(0) = 0 is required (a zero at the origin)");
}

std::vector<FiberPoint> CexpOperator::fiber(const UnitCirclePoint& z) const {
  const cplx zeta = product_.evaluate(z.value);
  const auto pre = product_.preimages(UnitCirclePoint(zeta));
  std::vector<FiberPoint> out;
  out.reserve(pre.size());
  for (const auto& w : pre) {
    const double th = w.arg();
    out.push_back({th, w.value, 1.0 / product_.boundary_derivative_modulus(th)});
  }
  return out;
}

const std::vector<std::vector<FiberPoint>>& CexpOperator::fiber_table(std::size_t grid_n) const {
  auto it = tables_.find(grid_n);
  if (it != tables_.end()) return it->second;
  CircleGrid grid(grid_n);
  std::vector<std::vector<FiberPoint>> table(grid_n);
  for (std::size_t j = 0; j < grid_n; ++j) table[j] = fiber(UnitCirclePoint(grid.node(j)));
  return tables_.emplace(grid_n, std::move(table)).first->second;
}

cplx CexpOperator::apply_pointwise(const AnalyticPoly& f, const UnitCirclePoint& z) const {
  cplx out(0.0, 0.0);
  for (const auto& fp : fiber(z)) out += f.eval(fp.point) * fp.weight;
  return out;
}

cplx CexpOperator::apply_pointwise(const BoundarySamples& f, const UnitCirclePoint& z) const {
  cplx out(0.0, 0.0);
  for (const auto& fp : fiber(z)) out += sample_eval(f, fp.theta) * fp.weight;
  return out;
}

AnalyticPoly CexpOperator::apply_fourier(const AnalyticPoly& f, std::size_t band,
                                         double* residual_out) const {
  const std::size_t n =
      next_power_of_two(std::max<std::size_t>(4096, 8 * (std::max(f.deg(), band * product_.degree()) + 1)));
  CircleGrid grid(n);
  const auto fs = f.sample(grid);
  std::vector<cplx> eta(n);
  for (std::size_t j = 0; j < n; ++j) eta[j] = product_.evaluate(grid.node(j));

  std::vector<cplx> power(n, cplx(1.0, 0.0));  // eta^k
  std::vector<cplx> acc(n, cplx(0.0, 0.0));
  for (std::size_t k = 0; k <= band; ++k) {
    cplx ip(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) ip += fs.values[j] * std::conj(power[j]);
    ip /= static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) acc[j] += ip * power[j];
    if (k < band)
      for (std::size_t j = 0; j < n; ++j) power[j] *= eta[j];
  }
  if (residual_out) {
    // ||f - reconstruction||_2 over the grid; large values mean the band
    // was too small to capture the eta-measurable part of f
    std::vector<cplx> diff(n);
    for (std::size_t j = 0; j < n; ++j) diff[j] = fs.values[j] - acc[j];
    *residual_out = l2_norm(diff) / std::sqrt(static_cast<double>(n));
  }
  auto coeffs = dft_coefficients(acc);
  double maxmag = 0.0;
  for (std::size_t k = 0; k < n / 2; ++k) maxmag = std::max(maxmag, std::abs(coeffs[k]));
  std::vector<cplx> out(n / 2, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < n / 2; ++k)
    if (std::abs(coeffs[k]) > 1e-13 * std::max(1.0, maxmag)) out[k] = coeffs[k];
  return AnalyticPoly(std::move(out));
}

double CexpOperator::partition_of_unity_residual(const UnitCirclePoint& z) const {
  double s = 0.0;
  for (const auto& fp : fiber(z)) s += fp.weight;
  return std::abs(s - 1.0);
}

double CexpOperator::theoretical_norm(double p) const {
  if (!(p > 0.0 && p <= 1.0))
    throw std::invalid_argument("theoretical_norm: p must lie in (0,1]");
  return std::pow(product_.derivative_sup(), 1.0 / p - 1.0);
}

std::vector<ScheduleEntry> CexpOperator::default_schedule() {
  std::vector<ScheduleEntry> out;
  for (double hw : {1e-2, 1e-3})
    for (double t : {1e4, 1e6, 1e8, 1e10}) out.push_back({t, hw, hw / 8.0});
  return out;
}

double CexpOperator::empirical_norm_lower_bound(double p, const std::vector<ScheduleEntry>& schedule,
                                                std::vector<SweepRow>* rows_out) const {
  if (schedule.empty()) throw std::invalid_argument("empirical_norm_lower_bound: empty schedule");
  const double theory = theoretical_norm(p);
  const double theta0 = product_.derivative_argmax();
  double best = 0.0;
  for (const auto& entry : schedule) {
    // the smoothing band must span at least 8 grid cells, otherwise the
    // quadrature of |f|^p overshoots near the transitions
    const std::size_t n = next_power_of_two(std::max<std::size_t>(
        65536, static_cast<std::size_t>(std::ceil(8.0 * kTwoPi / entry.delta))));
    CircleGrid grid(n);
    const auto u = smoothed_arc_log_modulus(grid, theta0, entry.half_width, entry.t, entry.delta);
    const auto f = outer_function(u);
    const auto& table = fiber_table(n);
    std::vector<cplx> ef(n);
    for (std::size_t j = 0; j < n; ++j) {
      cplx s(0.0, 0.0);
      for (const auto& fp : table[j]) s += f.interpolate_local(fp.theta) * fp.weight;
      ef[j] = s;
    }
    const double ratio =
        quasi_norm(BoundarySamples(grid, std::move(ef)), p) / quasi_norm(f, p);
    if (rows_out) rows_out->push_back({entry.t, entry.half_width, entry.delta, ratio, theory});
    best = std::max(best, ratio);
  }
  return best;
}

double change_of_variables_residual(const BlaschkeProduct& b, const BoundarySamples& f) {
  const std::size_t n = f.grid.n;
  double lhs_re = 0.0, lhs_im = 0.0, rhs_re = 0.0, rhs_im = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double th = f.grid.theta(j);
    const cplx left = f.values[j] * b.boundary_derivative_modulus(th);
    lhs_re += left.real();
    lhs_im += left.imag();
    cplx s(0.0, 0.0);
    for (const auto& w : b.preimages(UnitCirclePoint(f.grid.node(j))))
      s += sample_eval(f, w.arg());
    rhs_re += s.real();
    rhs_im += s.imag();
  }
  const cplx lhs(lhs_re / n, lhs_im / n);
  const cplx rhs(rhs_re / n, rhs_im / n);
  return std::abs(lhs - rhs);
}

cplx birkhoff_james_residual(const CexpOperator& op, double p, const AnalyticPoly& f,
                             const AnalyticPoly& g) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("birkhoff_james_residual: p must lie in (0,1)");
  const auto ef = op.apply_fourier(f, f.deg());
  const double kernel_residual = l2_norm(ef.coeffs);
  if (kernel_residual >= 1e-8) {
    std::ostringstream os;
    os << "birkhoff_james_residual: f is not in the kernel (||E f||_2 = " << kernel_residual << ")";
    throw std::invalid_argument(os.str());
  }
  const auto eg = op.apply_fourier(g, g.deg() + 1);
  std::vector<cplx> diff(std::max(eg.coeffs.size(), g.coeffs.size()), cplx(0.0, 0.0));
  for (std::size_t i = 0; i < eg.coeffs.size(); ++i) diff[i] += eg.coeffs[i];
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) diff[i] -= g.coeffs[i];
  const double range_residual = l2_norm(diff);
  if (range_residual >= 1e-8) {
    std::ostringstream os;
    os << "birkhoff_james_residual: g is not in the range (||E g - g||_2 = " << range_residual
       << ")";
    throw std::invalid_argument(os.str());
  }

  const std::size_t n =
      next_power_of_two(std::max<std::size_t>(16384, 8 * (std::max(f.deg(), g.deg()) + 1)));
  CircleGrid grid(n);
  const auto fs = f.sample(grid);
  const auto gs = g.sample(grid);
  double gmin = 1e300;
  for (const cplx& v : gs.values) gmin = std::min(gmin, std::abs(v));
  if (gmin <= 1e-3)
    throw std::invalid_argument("birkhoff_james_residual: |g| must exceed 1e-3 on the circle");
  cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    acc += std::pow(std::abs(gs.values[j]), p - 2.0) * gs.values[j] * std::conj(fs.values[j]);
  return acc / static_cast<double>(n);
}

FiniteSpace::FiniteSpace(std::vector<double> w, std::vector<std::vector<std::size_t>> blocks)
    : weights(std::move(w)), partition(std::move(blocks)) {
  double sum = 0.0;
  for (double x : weights) {
    if (!(x > 0.0)) throw std::invalid_argument("FiniteSpace: weights must be positive");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("FiniteSpace: weights must sum to 1");
  std::vector<bool> seen(weights.size(), false);
  for (const auto& block : partition) {
    if (block.empty()) throw std::invalid_argument("FiniteSpace: empty partition block");
    for (std::size_t i : block) {
      if (i >= weights.size() || seen[i])
        throw std::invalid_argument("FiniteSpace: blocks must partition the index set");
      seen[i] = true;
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw std::invalid_argument("FiniteSpace: blocks must cover every point");
}

double finite_space_cexp_norm(const FiniteSpace& space, double p) {
  if (!(p > 0.0 && p <= 1.0))
    throw std::invalid_argument("finite_space_cexp_norm: p must lie in (0,1]");
  double best = 1.0;
  for (const auto& block : space.partition) {
    double mass = 0.0, wmin = 1e300;
    for (std::size_t i : block) {
      mass += space.weights[i];
      wmin = std::min(wmin, space.weights[i]);
    }
    best = std::max(best, std::pow(mass / wmin, (1.0 - p) / p));
  }
  return best;
}

}  // namespace hardycexp
