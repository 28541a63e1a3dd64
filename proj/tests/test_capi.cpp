#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>

#include "hardycexp.h"

namespace {

// eta = z (z - 1/2) / (1 - z/2)
struct Product {
  hc_blaschke* b = nullptr;
  Product() {
    const double zeros[] = {0.0, 0.0, 0.5, 0.0};
    REQUIRE(hc_blaschke_create(zeros, 2, 1.0, 0.0, &b) == HC_OK);
  }
  ~Product() { hc_blaschke_destroy(b); }
};

}  // namespace

TEST_CASE("blaschke lifecycle and oracles") {
  Product prod;
  double re = 0, im = 0;
  CHECK(hc_blaschke_eval(prod.b, 1.0, 0.0, &re, &im) == HC_OK);
  CHECK(std::abs(re - 1.0) < 1e-12);
  CHECK(std::abs(im) < 1e-12);

  double d = 0;
  CHECK(hc_blaschke_derivative_modulus(prod.b, 0.0, &d) == HC_OK);
  CHECK(d == doctest::Approx(4.0).epsilon(1e-12));

  double pre[4] = {0};
  CHECK(hc_blaschke_preimages(prod.b, 1.0, 0.0, pre) == HC_OK);
  CHECK(std::abs(pre[0] - 1.0) < 1e-9);   // sorted by argument: 1 first
  CHECK(std::abs(pre[2] + 1.0) < 1e-9);

  double sup = 0, inf = 0, argmax = 0, lo = 0, hi = 0;
  CHECK(hc_blaschke_derivative_sup(prod.b, &sup, &argmax) == HC_OK);
  CHECK(hc_blaschke_derivative_inf(prod.b, &inf) == HC_OK);
  CHECK(hc_blaschke_derivative_bounds(prod.b, &lo, &hi) == HC_OK);
  CHECK(sup == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(inf == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
  CHECK(lo <= inf + 1e-12);
  CHECK(sup <= hi + 1e-12);
}

TEST_CASE("error reporting at the boundary") {
  const double bad[] = {1.5, 0.0};
  hc_blaschke* b = nullptr;
  CHECK(hc_blaschke_create(bad, 1, 1.0, 0.0, &b) == HC_ERROR_INVALID_ARGUMENT);
  CHECK(b == nullptr);
  CHECK(std::strlen(hc_last_error()) > 0);

  double out = 0;
  CHECK(hc_blaschke_derivative_modulus(nullptr, 0.0, &out) == HC_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("cexp through the c api") {
  Product prod;
  hc_cexp* op = nullptr;
  REQUIRE(hc_cexp_create(prod.b, &op) == HC_OK);

  // E(z|eta)(1) = -eta(1)/2 = -1/2
  const double z_poly[] = {0.0, 0.0, 1.0, 0.0};
  double re = 0, im = 0;
  CHECK(hc_cexp_apply_pointwise(op, z_poly, 2, 1.0, 0.0, &re, &im) == HC_OK);
  CHECK(re == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(std::abs(im) < 1e-9);

  double coeffs[128] = {0};
  size_t len = 0;
  CHECK(hc_cexp_apply_fourier(op, z_poly, 2, 2, coeffs, 64, &len) == HC_OK);
  REQUIRE(len >= 2);
  CHECK(std::abs(coeffs[0]) < 1e-10);                 // hat(E z)(0) = 0
  CHECK(coeffs[2] == doctest::Approx(0.25).epsilon(1e-8));  // -eta/2 = z/4 + ...

  double residual = 1.0;
  CHECK(hc_cexp_partition_residual(op, 0.0, 1.0, &residual) == HC_OK);
  CHECK(residual < 1e-10);

  double norm = 0;
  CHECK(hc_cexp_theoretical_norm(op, 2.0 / 3.0, &norm) == HC_OK);
  CHECK(norm == doctest::Approx(2.0).epsilon(1e-9));

  const double schedule[] = {1e8, 1e-2, 1.25e-3};
  char* csv = nullptr;
  double ratio = 0;
  CHECK(hc_cexp_empirical_norm(op, 2.0 / 3.0, schedule, 1, &csv, &ratio) == HC_OK);
  REQUIRE(csv != nullptr);
  CHECK(std::string(csv).rfind("t,half_width,delta,ratio,theoretical", 0) == 0);
  hc_string_free(csv);
  CHECK(ratio > 1.8);
  CHECK(ratio <= 2.0 * (1 + 1e-6));

  hc_cexp_destroy(op);
}

TEST_CASE("multiplier and dirichlet json endpoints") {
  char* verdict = nullptr;
  REQUIRE(hc_multiplier_classify("{\"kind\":\"symbolic\",\"d\":2,\"J\":[2]}", 0.5, 0, 1,
                                 &verdict) == HC_OK);
  CHECK(std::string(verdict).find("Contractive") != std::string::npos);
  hc_string_free(verdict);

  char* out = nullptr;
  REQUIRE(hc_multiplier_apply(
              "{\"kind\":\"symbolic\",\"d\":1,\"J\":[1]}",
              "{\"d\":1,\"terms\":[{\"alpha\":[0],\"c\":[1.0,0.0]},{\"alpha\":[1],\"c\":[2.0,0.0]}]}",
              &out) == HC_OK);
  std::string projected(out);
  hc_string_free(out);
  CHECK(projected.find("[2.0,0.0]") == std::string::npos);  // z-coefficient killed

  char* fal = nullptr;
  REQUIRE(hc_multiplier_falsify(
              "{\"kind\":\"explicit\",\"d\":1,\"box\":[4],\"members\":[[1]]}", 0.5, 4, 1,
              &fal) == HC_OK);
  std::string fal_text(fal);
  hc_string_free(fal);
  CHECK(fal_text.find("\"conclusive\":true") != std::string::npos);

  double c = 0;
  CHECK(hc_coefficient_constant(0.5, &c) == HC_OK);
  CHECK(c == doctest::Approx(1.299038105676658).epsilon(1e-12));
  CHECK(hc_coefficient_constant(2.0, &c) == HC_ERROR_INVALID_ARGUMENT);

  const uint64_t members[] = {1, 2, 4, 8};
  char* dv = nullptr;
  REQUIRE(hc_dirichlet_classify(members, 4, 10, &dv) == HC_OK);
  CHECK(std::string(dv).find("UndecidableFromTruncation") != std::string::npos);
  hc_string_free(dv);

  CHECK(hc_multiplier_classify("not json", 0.5, 0, 1, &verdict) != HC_OK);
  CHECK(std::strlen(hc_last_error()) > 0);
}
