#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hardycexp/fft.hpp"
#include "hardycexp/hardy.hpp"

using namespace hardycexp;

namespace {
const double kPi = std::numbers::pi;

AnalyticPoly random_poly(std::mt19937_64& rng, std::size_t deg) {
  std::normal_distribution<double> gauss;
  std::vector<cplx> c(deg + 1);
  for (auto& v : c) v = cplx(gauss(rng), gauss(rng));
  return AnalyticPoly(std::move(c));
}
}  // namespace

TEST_CASE("grid validation and nodes") {
  CHECK_THROWS_AS(CircleGrid(12), std::invalid_argument);  // not a power of two
  CHECK_THROWS_AS(CircleGrid(4), std::invalid_argument);   // too small
  CircleGrid g(16);
  CHECK(g.theta(4) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(std::abs(g.node(8) - cplx(-1, 0)) < 1e-15);
}

TEST_CASE("fft round trip and parseval") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss;
  std::vector<cplx> v(256);
  for (auto& x : v) x = cplx(gauss(rng), gauss(rng));
  auto c = dft_coefficients(v);
  auto back = dft_synthesis(c);
  double time_energy = 0.0, coeff_energy = 0.0, diff = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    time_energy += std::norm(v[j]);
    coeff_energy += std::norm(c[j]);
    diff = std::max(diff, std::abs(back[j] - v[j]));
  }
  CHECK(diff < 1e-12);
  CHECK(time_energy / v.size() == doctest::Approx(coeff_energy).epsilon(1e-12));
}

TEST_CASE("quasi-norm oracles") {
  // constants: ||c||_p = |c|
  AnalyticPoly c({cplx(3, 4)});
  CHECK(quasi_norm(c, 0.5) == doctest::Approx(5.0).epsilon(1e-12));
  // monomials are unimodular on the circle
  AnalyticPoly z({cplx(0, 0), cplx(0, 0), cplx(1, 0)});
  CHECK(quasi_norm(z, 0.3) == doctest::Approx(1.0).epsilon(1e-12));
  // ||1 + z||_2^2 = 2 (Parseval; p = 2 still meaningful for the sampler)
  AnalyticPoly f({cplx(1, 0), cplx(1, 0)});
  CHECK(quasi_norm(f, 2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK_THROWS_AS(quasi_norm(f, 0.0), std::invalid_argument);
}

TEST_CASE("quasi-norm p-subadditivity and homogeneity") {
  std::mt19937_64 rng(5);
  const double p = 0.5;
  for (int t = 0; t < 10; ++t) {
    auto f = random_poly(rng, 6), g = random_poly(rng, 6);
    std::vector<cplx> sum(7);
    for (int j = 0; j < 7; ++j) sum[j] = f.coeffs[j] + g.coeffs[j];
    AnalyticPoly h(sum);
    double lhs = std::pow(quasi_norm(h, p), p);
    double rhs = std::pow(quasi_norm(f, p), p) + std::pow(quasi_norm(g, p), p);
    CHECK(lhs <= rhs + 1e-9);
    AnalyticPoly scaled(f.coeffs);
    for (auto& v : scaled.coeffs) v *= cplx(0, 2);
    CHECK(quasi_norm(scaled, p) == doctest::Approx(2 * quasi_norm(f, p)).epsilon(1e-10));
  }
}

TEST_CASE("fourier coefficients recover a polynomial") {
  std::mt19937_64 rng(7);
  auto f = random_poly(rng, 5);
  auto samples = f.sample(CircleGrid(64));
  auto c = fourier_coefficients(samples, -3, 8);
  for (long k = -3; k <= 8; ++k) {
    cplx expected = (k >= 0 && k <= 5) ? f.coeffs[k] : cplx(0, 0);
    CHECK(std::abs(c[k + 3] - expected) < 1e-12);
  }
  CHECK_THROWS_AS(fourier_coefficients(samples, -40, 40), std::invalid_argument);
}

TEST_CASE("band-limited and local interpolation agree off-grid") {
  std::mt19937_64 rng(9);
  auto f = random_poly(rng, 10);
  auto samples = f.sample(CircleGrid(256));
  for (int j = 0; j < 12; ++j) {
    double th = 2 * kPi * (j + 0.37) / 12.0;
    cplx exact = f.eval(std::polar(1.0, th));
    CHECK(std::abs(samples.interpolate_bandlimited(th) - exact) < 1e-10);
    CHECK(std::abs(samples.interpolate_local(th) - exact) < 1e-7);
  }
}

TEST_CASE("outer function has the prescribed modulus and is analytic") {
  CircleGrid grid(1024);
  std::vector<cplx> logmod(grid.n);
  for (std::size_t j = 0; j < grid.n; ++j)
    logmod[j] = cplx(0.3 * std::cos(grid.theta(j)) + 0.1 * std::sin(2 * grid.theta(j)), 0.0);
  auto F = outer_function(BoundarySamples(grid, logmod));
  for (std::size_t j = 0; j < grid.n; j += 37)
    CHECK(std::log(std::abs(F.values[j])) ==
          doctest::Approx(logmod[j].real()).epsilon(1e-10));
  // analyticity: negative Fourier coefficients vanish
  auto c = fourier_coefficients(F, -32, -1);
  for (const auto& v : c) CHECK(std::abs(v) < 1e-10);

  std::vector<cplx> bad = logmod;
  bad[0] = cplx(0.0, 0.5);
  CHECK_THROWS_AS(outer_function(BoundarySamples(grid, bad)), std::invalid_argument);
}

TEST_CASE("smoothed arc profile hits its plateaus") {
  CircleGrid grid(4096);
  const double t = 100.0, hw = 0.5, delta = 0.05;
  auto u = smoothed_arc_log_modulus(grid, 1.0, hw, t, delta);
  auto at = [&](double th) { return u.values[std::size_t(th / (2 * kPi) * grid.n)].real(); };
  CHECK(at(1.0) == doctest::Approx(std::log(t)).epsilon(1e-12));
  CHECK(at(1.0 + hw - delta - 0.01) == doctest::Approx(std::log(t)).epsilon(1e-9));
  CHECK(at(1.0 + hw + delta + 0.01) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(at(4.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("substitute power is a quasi-norm isometry") {
  std::mt19937_64 rng(11);
  auto f = random_poly(rng, 4);
  for (unsigned k : {2u, 3u}) {
    auto g = substitute_power(f, k);
    CHECK(g.deg() == k * f.deg());
    for (double p : {0.4, 0.8})
      CHECK(quasi_norm(g, p) == doctest::Approx(quasi_norm(f, p)).epsilon(1e-8));
  }
}

TEST_CASE("multipoly json round trip and evaluation") {
  MultiPoly f(2);
  f.set({1, 0}, cplx(2, -1));
  f.set({0, 3}, cplx(0, 1));
  f.set({2, 2}, cplx(-0.5, 0));
  auto g = MultiPoly::from_json(f.to_json());
  REQUIRE(g.terms.size() == 3);
  std::vector<cplx> z{std::polar(1.0, 0.4), std::polar(1.0, -1.1)};
  CHECK(std::abs(f.eval(z) - g.eval(z)) < 1e-15);
  f.set({1, 0}, cplx(0, 0));
  CHECK(f.terms.size() == 2);  // zero coefficient erases
  CHECK(f.max_degree(1) == 3);
}

TEST_CASE("torus quasi-norm matches the 1-d sampler on single-variable input") {
  std::mt19937_64 rng(13);
  auto f = random_poly(rng, 4);
  MultiPoly g(2);
  for (std::size_t j = 0; j < f.coeffs.size(); ++j)
    g.set({static_cast<unsigned>(j), 0}, f.coeffs[j]);
  for (double p : {0.3, 0.7})
    CHECK(torus_quasi_norm(g, p, 4096) == doctest::Approx(quasi_norm(f, p)).epsilon(1e-6));
  MultiPoly high(4);
  CHECK_THROWS_AS(torus_quasi_norm(high, 0.5, 64), std::invalid_argument);
}
