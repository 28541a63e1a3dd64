#include "hardycexp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hardycexp/blaschke.hpp"
#include "hardycexp/cexp.hpp"
#include "hardycexp/fft.hpp"
#include "hardycexp/hardy.hpp"
#include "hardycexp/multipliers.hpp"
#include "json.hpp"

namespace hardycexp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx random_in_disk(std::mt19937_64& rng, double max_radius) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double r = max_radius * std::sqrt(unif(rng));
  const double th = kTwoPi * unif(rng);
  return std::polar(r, th);
}

BlaschkeProduct random_blaschke(std::mt19937_64& rng, std::size_t max_degree, double max_radius,
                                bool zero_at_origin) {
  std::uniform_int_distribution<std::size_t> degs(1, max_degree);
  const std::size_t k = degs(rng);
  std::vector<cplx> zeros;
  if (zero_at_origin) zeros.emplace_back(0.0, 0.0);
  while (zeros.size() < k) zeros.push_back(random_in_disk(rng, max_radius));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  return BlaschkeProduct(std::move(zeros), std::polar(1.0, kTwoPi * unif(rng)));
}

AnalyticPoly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> degs(0, max_degree);
  std::vector<cplx> c(degs(rng) + 1);
  for (auto& x : c) x = cplx(gauss(rng), gauss(rng));
  return AnalyticPoly(std::move(c));
}

MultiPoly random_bivariate(std::mt19937_64& rng, unsigned max_degree) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  MultiPoly f(2);
  for (unsigned a = 0; a <= max_degree; ++a)
    for (unsigned b = 0; b <= max_degree; ++b)
      f.set({a, b}, cplx(gauss(rng), gauss(rng)));
  return f;
}

struct Suite {
  std::vector<CheckReport> reports;

  void add(const std::string& name, double residual, double tolerance) {
    reports.push_back({name, residual, tolerance, residual < tolerance});
  }
};

void blaschke_checks(Suite& s, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto b = random_blaschke(rng, 8, 0.9, false);
    const cplx v = b.evaluate(std::polar(1.0, kTwoPi * unif(rng)));
    worst = std::max(worst, std::abs(std::abs(v) - 1.0));
  }
  s.add("blaschke/modulus-preservation", worst, 1e-11);

  worst = 0.0;
  double count_defect = 0.0;
  for (int i = 0; i < 60; ++i) {
    const auto b = random_blaschke(rng, 10, 0.9, false);
    const UnitCirclePoint z(std::polar(1.0, kTwoPi * unif(rng)));
    const auto pre = b.preimages(z);
    if (pre.size() != b.degree()) count_defect += 1.0;
    for (const auto& w : pre) worst = std::max(worst, std::abs(b.evaluate(w.value) - z.value));
  }
  s.add("blaschke/preimage-completeness", worst + count_defect, 1e-10);

  worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto b = random_blaschke(rng, 8, 0.9, false);
    const double th = kTwoPi * unif(rng);
    const double h = 1e-5;
    const cplx up = b.evaluate(std::polar(1.0, th + h));
    const cplx dn = b.evaluate(std::polar(1.0, th - h));
    const double fd = std::abs(up - dn) / std::abs(std::polar(1.0, th + h) - std::polar(1.0, th - h));
    const double an = b.boundary_derivative_modulus(th);
    worst = std::max(worst, std::abs(fd - an) / an);
  }
  s.add("blaschke/finite-difference-consistency", worst, 1e-6);

  worst = 0.0;
  for (int i = 0; i < 40; ++i) {
    const auto b = random_blaschke(rng, 8, 0.9, false);
    const auto [lo, hi] = b.derivative_sandwich_bounds();
    worst = std::max(worst, lo - b.derivative_inf());
    worst = std::max(worst, b.derivative_sup() - hi);
  }
  s.add("blaschke/bound-sandwich", std::max(worst, 0.0), 1e-9);

  worst = 0.0;
  for (int i = 0; i < 40; ++i) {
    const auto b = random_blaschke(rng, 8, 0.9, true);
    worst = std::max(worst, static_cast<double>(b.degree()) - b.derivative_sup());
  }
  s.add("blaschke/degree-lower-bound", std::max(worst, 0.0), 1e-9);
}

void hardy_checks(Suite& s, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);

  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto f = random_poly(rng, 24);
    const CircleGrid grid(256);
    const auto samples = f.sample(grid);
    double l2 = 0.0;
    for (const cplx& c : fourier_coefficients(samples, 0, 127)) l2 += std::norm(c);
    worst = std::max(worst, std::abs(quasi_norm(samples, 2.0) - std::sqrt(l2)));
  }
  s.add("hardy/parseval", worst, 1e-10);

  worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto f = random_poly(rng, 16);
    const CircleGrid grid(1024);
    std::uniform_int_distribution<std::size_t> shift(0, grid.n - 1);
    const cplx lambda = grid.node(shift(rng));
    std::vector<cplx> rotated = f.coeffs;
    cplx pw(1.0, 0.0);
    for (auto& c : rotated) {
      c *= pw;
      pw *= lambda;
    }
    const double p = 0.3 + 0.6 * std::generate_canonical<double, 53>(rng);
    worst = std::max(worst, std::abs(quasi_norm(AnalyticPoly(rotated).sample(grid), p) -
                                     quasi_norm(f.sample(grid), p)));
  }
  s.add("hardy/rotation-invariance", worst, 1e-9);

  worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto f = random_poly(rng, 8);
    std::uniform_int_distribution<unsigned> ks(1, 5);
    const unsigned k = ks(rng);
    for (double p : {0.3, 0.5, 0.8}) {
      const double a = quasi_norm(f, p);
      const double b = quasi_norm(substitute_power(f, k), p);
      worst = std::max(worst, std::abs(a - b) / std::max(a, 1e-300));
    }
  }
  s.add("hardy/substitute-power-isometry", worst, 1e-8);

  worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const CircleGrid grid(4096);
    std::vector<cplx> u(grid.n, cplx(0.0, 0.0));
    // random real trigonometric polynomial of degree <= 32
    std::vector<cplx> coef(grid.n, cplx(0.0, 0.0));
    for (int k = 1; k <= 32; ++k) {
      const cplx c(gauss(rng), gauss(rng));
      coef[static_cast<std::size_t>(k)] = 0.05 * c;
      coef[grid.n - static_cast<std::size_t>(k)] = 0.05 * std::conj(c);
    }
    coef[0] = cplx(gauss(rng) * 0.05, 0.0);
    const auto vals = dft_synthesis(coef);
    std::vector<cplx> real_vals(grid.n);
    for (std::size_t j = 0; j < grid.n; ++j) real_vals[j] = cplx(vals[j].real(), 0.0);
    const auto f = outer_function(BoundarySamples(grid, real_vals));
    const auto neg = fourier_coefficients(f, -static_cast<long>(grid.n) / 4, -1);
    for (const cplx& c : neg) worst = std::max(worst, std::abs(c));
  }
  s.add("hardy/outer-analyticity", worst, 1e-7);
}

void cexp_checks(Suite& s, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  double idem = 0.0, route = 0.0, meas = 0.0, adj = 0.0, mean = 0.0, part = 0.0;
  for (int i = 0; i < 12; ++i) {
    const CexpOperator op(random_blaschke(rng, 6, 0.8, true));
    const auto f = random_poly(rng, 12);
    const auto ef = op.apply_fourier(f, f.deg());
    const auto eef = op.apply_fourier(ef, ef.deg());
    const CircleGrid grid(2048);
    const auto a = ef.sample(grid);
    const auto b = eef.sample(grid);
    for (std::size_t j = 0; j < grid.n; ++j)
      idem = std::max(idem, std::abs(a.values[j] - b.values[j]));

    for (int t = 0; t < 16; ++t) {
      const UnitCirclePoint z(std::polar(1.0, kTwoPi * unif(rng)));
      route = std::max(route, std::abs(op.apply_pointwise(f, z) - ef.eval(z.value)));
      part = std::max(part, op.partition_of_unity_residual(z));
      const cplx val = op.apply_pointwise(f, z);
      for (const auto& fp : op.fiber(z))
        meas = std::max(meas, std::abs(op.apply_pointwise(f, UnitCirclePoint(fp.point)) - val));
    }

    const auto g = random_poly(rng, 12);
    const auto eg = op.apply_fourier(g, g.deg());
    const auto fs = f.sample(grid), gs = g.sample(grid);
    const auto efs = ef.sample(grid), egs = eg.sample(grid);
    cplx ip1(0.0, 0.0), ip2(0.0, 0.0), m1(0.0, 0.0), m2(0.0, 0.0);
    for (std::size_t j = 0; j < grid.n; ++j) {
      ip1 += efs.values[j] * std::conj(gs.values[j]);
      ip2 += fs.values[j] * std::conj(egs.values[j]);
      m1 += efs.values[j];
      m2 += fs.values[j];
    }
    adj = std::max(adj, std::abs(ip1 - ip2) / static_cast<double>(grid.n));
    mean = std::max(mean, std::abs(m1 - m2) / static_cast<double>(grid.n));
  }
  s.add("cexp/idempotence", idem, 1e-8);
  s.add("cexp/route-agreement", route, 1e-8);
  s.add("cexp/measurability", meas, 1e-9);
  s.add("cexp/self-adjointness", adj, 1e-8);
  s.add("cexp/mean-preservation", mean, 1e-9);
  s.add("cexp/weight-normalization", part, 1e-8);

  // no numerical counterexample to the operator-norm upper bound
  double ceiling = 0.0;
  const CexpOperator op(BlaschkeProduct({cplx(0.0, 0.0), cplx(0.5, 0.0)}));
  const double p = 0.5;
  const double theory = op.theoretical_norm(p);
  const CircleGrid grid(4096);
  for (int i = 0; i < 1000; ++i) {
    const auto f = random_poly(rng, 12);
    const auto ef = op.apply_fourier(f, f.deg());
    const double r = quasi_norm(ef.sample(grid), p) / quasi_norm(f.sample(grid), p);
    ceiling = std::max(ceiling, r / theory);
  }
  s.add("cexp/norm-ceiling", std::max(ceiling - 1.0, 0.0), 1e-6);

  // finite-space closed form against the brute-force grid oracle
  double fs_worst = 0.0;
  {
    const FiniteSpace space({0.25, 0.25, 0.2, 0.3}, {{0, 1}, {2, 3}});
    for (double q : {0.3, 0.5, 0.8, 1.0}) {
      const double closed = finite_space_cexp_norm(space, q);
      double brute = 0.0;
      const int steps = 24;
      std::vector<double> f(4);
      for (int a = 0; a <= steps; ++a)
        for (int b = 0; b <= steps; ++b)
          for (int c = 0; c <= steps; ++c)
            for (int d = 0; d <= steps; ++d) {
              if (a + b + c + d == 0) continue;
              f = {static_cast<double>(a), static_cast<double>(b), static_cast<double>(c),
                   static_cast<double>(d)};
              double num = 0.0, den = 0.0;
              const double e1 = (0.25 * f[0] + 0.25 * f[1]) / 0.5;
              const double e2 = (0.2 * f[2] + 0.3 * f[3]) / 0.5;
              num = 0.5 * std::pow(std::abs(e1), q) + 0.5 * std::pow(std::abs(e2), q);
              for (int j = 0; j < 4; ++j)
                den += space.weights[static_cast<std::size_t>(j)] * std::pow(f[static_cast<std::size_t>(j)], q);
              brute = std::max(brute, std::pow(num / den, 1.0 / q));
            }
      fs_worst = std::max(fs_worst, brute - closed * (1.0 + 1e-9));
    }
  }
  s.add("cexp/finite-space-oracle", std::max(fs_worst, 0.0), 1e-9);
}

void multiplier_checks(Suite& s, std::mt19937_64& rng) {
  // idempotence and linearity, exact on coefficients
  double exact = 0.0;
  const auto gamma = IndexSet::symbolic(2, {2});
  for (int i = 0; i < 20; ++i) {
    const auto f = random_bivariate(rng, 4);
    const auto g = random_bivariate(rng, 4);
    const auto pf = apply_multiplier(gamma, f);
    const auto ppf = apply_multiplier(gamma, pf);
    for (const auto& [alpha, c] : pf.terms) {
      const auto it = ppf.terms.find(alpha);
      exact = std::max(exact, std::abs((it == ppf.terms.end() ? cplx(0, 0) : it->second) - c));
    }
    MultiPoly combo(2);
    const cplx a(0.7, -0.2), b(-1.1, 0.4);
    for (const auto& [alpha, c] : f.terms) combo.set(alpha, a * c);
    for (const auto& [alpha, c] : g.terms) {
      const auto it = combo.terms.find(alpha);
      combo.set(alpha, (it == combo.terms.end() ? cplx(0, 0) : it->second) + b * c);
    }
    const auto lhs = apply_multiplier(gamma, combo);
    const auto pg = apply_multiplier(gamma, g);
    for (const auto& [alpha, c] : lhs.terms) {
      cplx rhs(0.0, 0.0);
      if (auto it = pf.terms.find(alpha); it != pf.terms.end()) rhs += a * it->second;
      if (auto it = pg.terms.find(alpha); it != pg.terms.end()) rhs += b * it->second;
      exact = std::max(exact, std::abs(c - rhs));
    }
  }
  s.add("multipliers/idempotence-linearity", exact, 1e-12);

  // contractivity of N_J by sampling, plus the z2-mean identity
  double ratio_excess = 0.0, mean_diff = 0.0;
  for (int i = 0; i < 500; ++i) {
    const auto f = random_bivariate(rng, 4);
    const auto pf = apply_multiplier(gamma, f);
    for (double p : {0.3, 0.5, 0.8}) {
      const double r = torus_quasi_norm(pf, p, 32) / torus_quasi_norm(f, p, 32);
      ratio_excess = std::max(ratio_excess, r - 1.0);
    }
    // z2-mean at a few z1 points
    for (int t = 0; t < 4; ++t) {
      const cplx z1 = std::polar(1.0, kTwoPi * std::generate_canonical<double, 53>(rng));
      cplx m(0.0, 0.0);
      const int nq = 32;
      for (int q = 0; q < nq; ++q)
        m += f.eval({z1, std::polar(1.0, kTwoPi * q / static_cast<double>(nq))});
      m /= static_cast<double>(nq);
      mean_diff = std::max(mean_diff, std::abs(m - pf.eval({z1, cplx(1.0, 0.0)})));
    }
  }
  s.add("multipliers/NJ-contractivity-sampling", std::max(ratio_excess, 0.0), 1e-9);
  s.add("multipliers/NJ-z2-mean-identity", mean_diff, 1e-10);

  // P_evens equals E(.|z^2) on analytic polynomials, coefficientwise
  double cross = 0.0;
  {
    std::set<std::vector<unsigned>> evens;
    for (unsigned k = 0; k <= 12; k += 2) evens.insert({k});
    const auto gev = IndexSet::explicit_set({12}, evens);
    const CexpOperator op(BlaschkeProduct({cplx(0.0, 0.0), cplx(0.0, 0.0)}));
    for (int i = 0; i < 10; ++i) {
      const auto f = random_poly(rng, 12);
      MultiPoly mf(1);
      for (std::size_t j = 0; j < f.coeffs.size(); ++j)
        mf.set({static_cast<unsigned>(j)}, f.coeffs[j]);
      const auto pf = apply_multiplier(gev, mf);
      const auto ef = op.apply_fourier(f, f.deg());
      for (unsigned k = 0; k <= 12; ++k) {
        const auto it = pf.terms.find({k});
        const cplx a = it == pf.terms.end() ? cplx(0, 0) : it->second;
        const cplx b = k < ef.coeffs.size() ? ef.coeffs[k] : cplx(0, 0);
        cross = std::max(cross, std::abs(a - b));
      }
    }
  }
  s.add("multipliers/evens-equals-cexp-z2", cross, 1e-10);

  // classification is invariant under coordinate permutation
  {
    std::set<std::vector<unsigned>> m1, m2;
    for (unsigned a = 0; a <= 3; ++a) m1.insert({a, 0u});
    for (unsigned a = 0; a <= 3; ++a) m2.insert({0u, a});
    const auto v1 = classify(IndexSet::explicit_set({3, 3}, m1), 0.5);
    const auto v2 = classify(IndexSet::explicit_set({3, 3}, m2), 0.5);
    s.add("multipliers/permutation-invariance", v1.status == v2.status ? 0.0 : 1.0, 0.5);
  }

  // ratio family dominated by the closed-form constant, equality at c*
  double dom = 0.0, at_cstar = 0.0;
  for (double p : {0.25, 0.5, 0.75}) {
    const double cc = coefficient_constant(p);
    for (int i = 0; i < 1024; ++i) {
      const double c = static_cast<double>(i) / 1024.0;
      dom = std::max(dom, coefficient_ratio_family(p, c) - cc);
    }
    const double cstar = std::sqrt(p / (2.0 - p));
    at_cstar = std::max(at_cstar, std::abs(coefficient_ratio_family(p, cstar) - cc));
  }
  s.add("multipliers/ratio-family-dominated", std::max(dom, 0.0), 1e-12);
  s.add("multipliers/ratio-family-max-at-cstar", at_cstar, 1e-8);

  // Bohr consistency between the Dirichlet and multi-index classifiers
  {
    std::set<unsigned long long> smooth3;
    for (unsigned long long n = 1; n <= 30; ++n) {
      unsigned long long r = n;
      while (r % 2 == 0) r /= 2;
      while (r % 3 == 0) r /= 3;
      if (r == 1) smooth3.insert(n);
    }
    const auto vd = dirichlet_set_classify(smooth3, 30);
    auto broken = smooth3;
    broken.erase(12);
    const auto vb = dirichlet_set_classify(broken, 30);
    const bool ok = vd.status == VerdictStatus::UndecidableFromTruncation &&
                    vb.status == VerdictStatus::NotContractive;
    s.add("multipliers/bohr-consistency", ok ? 0.0 : 1.0, 0.5);
  }

  // kappa round trip for moderate n
  {
    double bad = 0.0;
    std::vector<unsigned long long> primes;
    for (unsigned long long q = 2; q <= 20000; ++q) {
      bool is_prime = true;
      for (unsigned long long r = 2; r * r <= q; ++r)
        if (q % r == 0) {
          is_prime = false;
          break;
        }
      if (is_prime) primes.push_back(q);
    }
    for (unsigned long long n = 1; n <= 20000; ++n) {
      const auto kappa = bohr_exponents(n);
      unsigned long long prod = 1;
      if (kappa.size() > primes.size()) {
        bad += 1.0;
        continue;
      }
      for (std::size_t j = 0; j < kappa.size(); ++j)
        for (unsigned e = 0; e < kappa[j]; ++e) prod *= primes[j];
      if (prod != n) bad += 1.0;
    }
    s.add("multipliers/bohr-round-trip", bad, 0.5);
  }
}

}  // namespace

std::string CheckReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["residual"] = residual;
  j["tolerance"] = tolerance;
  j["pass"] = pass;
  return j.dump();
}

std::vector<CheckReport> verify_all(std::uint64_t seed) {
  Suite s;
  std::mt19937_64 rng(seed);
  blaschke_checks(s, rng);
  hardy_checks(s, rng);
  cexp_checks(s, rng);
  multiplier_checks(s, rng);
  return s.reports;
}

}  // namespace hardycexp
