#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hardycexp/cexp.hpp"

using namespace hardycexp;

namespace {
const double kPi = std::numbers::pi;

BlaschkeProduct worked_example() { return BlaschkeProduct({cplx(0, 0), cplx(0.5, 0)}); }

AnalyticPoly identity_poly() { return AnalyticPoly({cplx(0, 0), cplx(1, 0)}); }
}  // namespace

TEST_CASE("constructor requires a zero at the origin") {
  CHECK_THROWS_AS(CexpOperator(BlaschkeProduct({cplx(0.5, 0)})), std::invalid_argument);
  CexpOperator ok(worked_example());
  CHECK(ok.product().degree() == 2);
}

TEST_CASE("fiber weights form a partition of unity") {
  CexpOperator op(worked_example());
  for (int j = 0; j < 16; ++j) {
    UnitCirclePoint z(std::polar(1.0, 0.13 + j * 0.39));
    auto fib = op.fiber(z);
    REQUIRE(fib.size() == 2);
    double total = 0.0;
    for (const auto& f : fib) total += f.weight;
    CHECK(std::abs(total - 1.0) < 1e-10);
    CHECK(op.partition_of_unity_residual(z) < 1e-10);
  }
}

TEST_CASE("worked closed form: E(z|eta) = -eta/2, both routes") {
  auto eta = worked_example();
  CexpOperator op(eta);
  auto z = identity_poly();

  // pointwise fiber route on a grid
  CircleGrid grid(4096);
  double worst_pointwise = 0.0;
  for (std::size_t j = 0; j < grid.n; j += 7) {
    UnitCirclePoint w(grid.node(j));
    cplx expected = -eta.evaluate(w.value) / 2.0;
    worst_pointwise = std::max(worst_pointwise, std::abs(op.apply_pointwise(z, w) - expected));
  }
  CHECK(worst_pointwise < 1e-8);

  // L^2 expansion route
  double residual = 0.0;
  auto g = op.apply_fourier(z, 2, &residual);
  double worst_fourier = 0.0;
  for (std::size_t j = 0; j < grid.n; j += 7) {
    cplx expected = -eta.evaluate(grid.node(j)) / 2.0;
    worst_fourier = std::max(worst_fourier, std::abs(g.eval(grid.node(j)) - expected));
  }
  CHECK(worst_fourier < 1e-8);
}

TEST_CASE("apply_fourier on eta = z^2 keeps even coefficients") {
  CexpOperator op(BlaschkeProduct({cplx(0, 0), cplx(0, 0)}));
  AnalyticPoly f({cplx(1, 0), cplx(2, 0), cplx(0, 3), cplx(1, 1), cplx(-2, 0)});
  auto g = op.apply_fourier(f, 4);
  REQUIRE(g.coeffs.size() >= 5);
  for (std::size_t k = 0; k < 5; ++k) {
    cplx expected = (k % 2 == 0) ? f.coeffs[k] : cplx(0, 0);
    CHECK(std::abs(g.coeffs[k] - expected) < 1e-10);
  }
}

TEST_CASE("idempotence and mean preservation") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss;
  std::vector<cplx> c(9);
  for (auto& v : c) v = cplx(gauss(rng), gauss(rng));
  AnalyticPoly f(c);

  CexpOperator op(worked_example());
  auto once = op.apply_fourier(f, 6);
  auto twice = op.apply_fourier(once, 6);
  double diff = 0.0;
  for (std::size_t k = 0; k < std::max(once.coeffs.size(), twice.coeffs.size()); ++k) {
    cplx a = k < once.coeffs.size() ? once.coeffs[k] : cplx(0, 0);
    cplx b = k < twice.coeffs.size() ? twice.coeffs[k] : cplx(0, 0);
    diff = std::max(diff, std::abs(a - b));
  }
  CHECK(diff < 1e-9);
  // the mean <f> = f(0) survives: eta^0 component is c_0
  CHECK(std::abs(once.coeffs[0] - f.coeffs[0]) < 1e-10);
}

TEST_CASE("change of variables identity") {
  auto eta = worked_example();
  CircleGrid grid(16384);
  std::vector<cplx> vals(grid.n);
  for (std::size_t j = 0; j < grid.n; ++j) {
    cplx z = grid.node(j);
    vals[j] = z + std::conj(z) * std::conj(z) * 0.5;  // a non-analytic test function
  }
  CHECK(change_of_variables_residual(eta, BoundarySamples(grid, vals)) < 1e-6);
}

TEST_CASE("theoretical norm oracles") {
  // eta = z^2: ||eta'||_inf = 2, p = 1/2 -> 2^(2-1) = 2
  CexpOperator sq(BlaschkeProduct({cplx(0, 0), cplx(0, 0)}));
  CHECK(sq.theoretical_norm(0.5) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(sq.theoretical_norm(1.0) == doctest::Approx(1.0).epsilon(1e-10));

  // worked example: ||eta'||_inf = 4, p = 2/3 -> 4^(1/2) = 2
  CexpOperator op(worked_example());
  CHECK(op.theoretical_norm(2.0 / 3.0) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK_THROWS_AS(op.theoretical_norm(0.0), std::invalid_argument);
}

TEST_CASE("empirical lower bound approaches the theoretical norm") {
  CexpOperator sq(BlaschkeProduct({cplx(0, 0), cplx(0, 0)}));
  std::vector<SweepRow> rows;
  double bound = sq.empirical_norm_lower_bound(0.5, {{1e8, 1e-2, 1.25e-3}}, &rows);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].theoretical == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(bound > 1.9);
  CHECK(bound <= 2.0 * (1 + 1e-6));
}

TEST_CASE("random samples never exceed the norm ceiling") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  CexpOperator op(worked_example());
  const double p = 0.5;
  const double ceiling = op.theoretical_norm(p);
  for (int t = 0; t < 40; ++t) {
    std::vector<cplx> c(7);
    for (auto& v : c) v = cplx(gauss(rng), gauss(rng));
    AnalyticPoly f(c);
    auto g = op.apply_fourier(f, 5);
    CHECK(quasi_norm(g, p) <= ceiling * quasi_norm(f, p) * (1 + 1e-6));
  }
}

TEST_CASE("birkhoff-james orthogonality residual vanishes") {
  CexpOperator op(worked_example());
  // f = z - E(z|eta) has zero expectation; g = 2 + eta-part of z is in the range
  auto z = identity_poly();
  auto ez = op.apply_fourier(z, 2);
  std::vector<cplx> fc(std::max<std::size_t>(2, ez.coeffs.size()), cplx(0, 0));
  fc[1] = cplx(1, 0);
  for (std::size_t k = 0; k < ez.coeffs.size(); ++k) fc[k] -= ez.coeffs[k];
  AnalyticPoly f(fc);
  std::vector<cplx> gc = ez.coeffs;
  if (gc.empty()) gc.assign(1, cplx(0, 0));
  gc[0] += cplx(2, 0);  // keep |g| bounded away from zero
  AnalyticPoly g(gc);
  CHECK(std::abs(birkhoff_james_residual(op, 0.5, f, g)) < 1e-6);
}

TEST_CASE("finite space norm closed form") {
  // two-point uniform space, trivial partition
  FiniteSpace two({0.5, 0.5}, {{0, 1}});
  CHECK(finite_space_cexp_norm(two, 0.5) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(finite_space_cexp_norm(two, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

  // weighted space, blocks {0,1} and {2}: ((w0+w1)/min)^{(1-p)/p} on the first block
  FiniteSpace sp({0.5, 0.25, 0.25}, {{0, 1}, {2}});
  double p = 0.5;
  CHECK(finite_space_cexp_norm(sp, p) ==
        doctest::Approx(std::pow(0.75 / 0.25, (1 - p) / p)).epsilon(1e-12));

  CHECK_THROWS_AS(FiniteSpace({0.5, 0.6}, {{0, 1}}), std::invalid_argument);  // not a probability
  CHECK_THROWS_AS(FiniteSpace({0.5, 0.5}, {{0}}), std::invalid_argument);     // not a partition
}

TEST_CASE("default schedule is usable") {
  auto sched = CexpOperator::default_schedule();
  REQUIRE(!sched.empty());
  for (const auto& e : sched) {
    CHECK(e.t > 1.0);
    CHECK(e.half_width > 0.0);
    CHECK(e.delta > 0.0);
    CHECK(e.delta < e.half_width);
  }
}
