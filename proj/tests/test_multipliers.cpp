#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <set>

#include "hardycexp/multipliers.hpp"

using namespace hardycexp;

namespace {

IndexSet evens_in_box(unsigned top) {
  std::set<std::vector<unsigned>> members;
  for (unsigned k = 0; k <= top; k += 2) members.insert({k});
  return IndexSet::explicit_set({top}, members);
}

IndexSet full_box(unsigned top) {
  std::set<std::vector<unsigned>> members;
  for (unsigned k = 0; k <= top; ++k) members.insert({k});
  return IndexSet::explicit_set({top}, members);
}

}  // namespace

TEST_CASE("index set membership and json round trip") {
  auto nj = IndexSet::symbolic(3, {2});
  CHECK(nj.contains({4, 0, 7}));
  CHECK(!nj.contains({0, 1, 0}));
  auto back = IndexSet::from_json(nj.to_json());
  CHECK(back.kind == IndexSet::Kind::Symbolic);
  CHECK(back.J == nj.J);

  auto inf = IndexSet::symbolic_infinite({1, 5});
  CHECK(inf.contains({0, 3}));   // short vectors are padded with zeros
  CHECK(!inf.contains({1}));
  auto inf_back = IndexSet::from_json(inf.to_json());
  CHECK(inf_back.infinite_dimension);

  auto ev = evens_in_box(8);
  CHECK(ev.contains({4}));
  CHECK(!ev.contains({3}));
  CHECK(ev.in_box({8}));
  CHECK(!ev.in_box({9}));
  auto ev_back = IndexSet::from_json(ev.to_json());
  CHECK(ev_back.members == ev.members);
}

TEST_CASE("apply multiplier keeps exactly the indexed coefficients") {
  MultiPoly f(2);
  f.set({0, 0}, cplx(1, 0));
  f.set({1, 0}, cplx(2, 0));
  f.set({0, 1}, cplx(0, 3));
  f.set({2, 1}, cplx(1, 1));
  auto nj = IndexSet::symbolic(2, {2});
  auto g = apply_multiplier(nj, f);
  CHECK(g.terms.size() == 2);
  CHECK(std::abs(g.terms.at({0, 0}) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(g.terms.at({1, 0}) - cplx(2, 0)) < 1e-15);

  // idempotence and linearity
  auto gg = apply_multiplier(nj, g);
  CHECK(gg.terms == g.terms);
}

TEST_CASE("structural checks on the evens") {
  auto checks = structural_checks(evens_in_box(8));
  REQUIRE(checks.size() == 4);
  CHECK(checks[0].pass);  // zero element
  CHECK(checks[1].pass);  // semigroup closure
  CHECK(!checks[2].pass); // ray completion fails at (2) -> (1)
  CHECK(checks[2].name == "ray-completion");
  CHECK(checks[2].counterexample.find("k = 1") != std::string::npos);
  CHECK(!checks[3].pass); // not equal to N_J* (J* is empty, (1) missing)
}

TEST_CASE("classification golden table") {
  CHECK(classify(IndexSet::symbolic(2, {2}), 0.5).status == VerdictStatus::Contractive);
  CHECK(classify(evens_in_box(8), 0.5).status == VerdictStatus::NotContractive);
  CHECK(classify(full_box(6), 0.5).status == VerdictStatus::UndecidableFromTruncation);

  auto single = IndexSet::explicit_set({4}, {{std::vector<unsigned>{1}}});
  auto v = classify(single, 0.5, true, 8, 1);
  CHECK(v.status == VerdictStatus::NotContractive);
  REQUIRE(v.witness_ratio.has_value());
  CHECK(*v.witness_ratio >= 1.29);
}

TEST_CASE("falsifier finds the one-coefficient extremal ratio") {
  auto single = IndexSet::explicit_set({4}, {{std::vector<unsigned>{1}}});
  auto r = falsify_contractivity(single, 0.5, 8, 1);
  CHECK(r.conclusive);
  // supremum is c(1, 1/2) = 2 (3/4)^{3/2}
  CHECK(r.ratio == doctest::Approx(coefficient_constant(0.5)).epsilon(2e-3));
  CHECK(r.ratio <= coefficient_constant(0.5) + 1e-6);
}

TEST_CASE("coefficient constant and ratio family") {
  // c(1, 1/2) = sqrt(4) (3/4)^{3/2}
  CHECK(coefficient_constant(0.5) == doctest::Approx(1.299038105676658).epsilon(1e-12));
  for (double p : {0.25, 0.5, 0.75}) {
    double cstar = std::sqrt(p / (2 - p));
    CHECK(coefficient_ratio_family(p, cstar) ==
          doctest::Approx(coefficient_constant(p)).epsilon(1e-12));
    // dominated everywhere else
    for (double c = 0.05; c < 1.0; c += 0.1)
      CHECK(coefficient_ratio_family(p, c) <= coefficient_constant(p) + 1e-12);
    // quadrature route agrees with the closed form
    for (double c : {0.2, cstar, 0.8})
      CHECK(coefficient_ratio_family_quadrature(p, c) ==
            doctest::Approx(coefficient_ratio_family(p, c)).epsilon(1e-8));
  }
  CHECK_THROWS_AS(coefficient_constant(1.5), std::invalid_argument);
}

TEST_CASE("bohr exponents") {
  CHECK(bohr_exponents(1).empty());
  CHECK(bohr_exponents(2) == std::vector<unsigned>{1});
  CHECK(bohr_exponents(12) == std::vector<unsigned>{2, 1});     // 2^2 * 3
  CHECK(bohr_exponents(50) == std::vector<unsigned>{1, 0, 2});  // 2 * 5^2
  CHECK_THROWS_AS(bohr_exponents(0), std::invalid_argument);

  // round trip through the ordered primes
  std::vector<unsigned long long> primes;
  for (unsigned long long q = 2; primes.size() < 500; ++q) {
    bool is_prime = true;
    for (unsigned long long r = 2; r * r <= q; ++r)
      if (q % r == 0) {
        is_prime = false;
        break;
      }
    if (is_prime) primes.push_back(q);
  }
  for (unsigned long long n = 1; n <= 3000; ++n) {
    auto kappa = bohr_exponents(n);
    unsigned long long back = 1;
    REQUIRE(kappa.size() <= primes.size());
    for (std::size_t j = 0; j < kappa.size(); ++j)
      for (unsigned e = 0; e < kappa[j]; ++e) back *= primes[j];
    CHECK(back == n);
  }
}

TEST_CASE("dirichlet set classification") {
  std::set<unsigned long long> smooth3;
  for (unsigned long long n = 1; n <= 100; ++n) {
    unsigned long long r = n;
    while (r % 2 == 0) r /= 2;
    while (r % 3 == 0) r /= 3;
    if (r == 1) smooth3.insert(n);
  }
  auto v = dirichlet_set_classify(smooth3, 100);
  CHECK(v.status == VerdictStatus::UndecidableFromTruncation);
  CHECK(v.reason.find("{2, 3}") != std::string::npos);

  auto missing = smooth3;
  missing.erase(12);
  auto v2 = dirichlet_set_classify(missing, 100);
  CHECK(v2.status == VerdictStatus::NotContractive);
  CHECK(v2.reason.find("12") != std::string::npos);

  // inserting 10 drags 5 into J*, so the first gap reported is 5 itself
  auto extra = smooth3;
  extra.insert(10);
  auto v3 = dirichlet_set_classify(extra, 100);
  CHECK(v3.status == VerdictStatus::NotContractive);
  CHECK(v3.reason.find("integer 5 ") != std::string::npos);

  CHECK_THROWS_AS(dirichlet_set_classify({}, 10), std::invalid_argument);
  CHECK_THROWS_AS(dirichlet_set_classify({200}, 100), std::invalid_argument);
}

TEST_CASE("verdict json carries the witness") {
  auto single = IndexSet::explicit_set({4}, {{std::vector<unsigned>{1}}});
  auto v = classify(single, 0.5, true, 4, 1);
  auto text = v.to_json();
  CHECK(text.find("\"status\":\"NotContractive\"") != std::string::npos);
  CHECK(text.find("\"witness\"") != std::string::npos);
}
