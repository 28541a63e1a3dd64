// C boundary: translate exceptions into status codes and keep the last
// message in a thread-local slot.
#include "hardycexp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <set>
#include <sstream>
#include <string>

#include "hardycexp/blaschke.hpp"
#include "hardycexp/cexp.hpp"
#include "hardycexp/hardy.hpp"
#include "hardycexp/multipliers.hpp"
#include "hardycexp/verify.hpp"

namespace {

thread_local std::string g_last_error;

hc_status fail(hc_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
hc_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const hardycexp::ConvergenceError& e) {
    return fail(HC_ERROR_CONVERGENCE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HC_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(HC_ERROR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(HC_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(HC_ERROR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hc_status require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
  return HC_OK;
}

std::vector<hardycexp::cplx> unpack_cplx(const double* data, size_t count) {
  std::vector<hardycexp::cplx> out(count);
  for (size_t i = 0; i < count; ++i) out[i] = {data[2 * i], data[2 * i + 1]};
  return out;
}

}  // namespace

struct hc_blaschke {
  hardycexp::BlaschkeProduct impl;
};

struct hc_cexp {
  hardycexp::CexpOperator impl;
};

extern "C" {

const char* hc_last_error(void) { return g_last_error.c_str(); }

void hc_string_free(char* s) { std::free(s); }

hc_status hc_blaschke_create(const double* zeros, size_t degree, double rot_re, double rot_im,
                             hc_blaschke** out) {
  return guarded([&] {
    require(out && (zeros || degree == 0), "null pointer");
    hardycexp::BlaschkeProduct b(unpack_cplx(zeros, degree), {rot_re, rot_im});
    *out = new hc_blaschke{std::move(b)};
    return HC_OK;
  });
}

void hc_blaschke_destroy(hc_blaschke* b) { delete b; }

hc_status hc_blaschke_eval(const hc_blaschke* b, double w_re, double w_im, double* out_re,
                           double* out_im) {
  return guarded([&] {
    require(b && out_re && out_im, "null pointer");
    hardycexp::cplx v = b->impl.evaluate({w_re, w_im});
    *out_re = v.real();
    *out_im = v.imag();
    return HC_OK;
  });
}

hc_status hc_blaschke_derivative_modulus(const hc_blaschke* b, double theta, double* out) {
  return guarded([&] {
    require(b && out, "null pointer");
    *out = b->impl.boundary_derivative_modulus(theta);
    return HC_OK;
  });
}

hc_status hc_blaschke_preimages(const hc_blaschke* b, double z_re, double z_im, double* out) {
  return guarded([&] {
    require(b && out, "null pointer");
    auto pts = b->impl.preimages(hardycexp::UnitCirclePoint({z_re, z_im}));
    for (size_t i = 0; i < pts.size(); ++i) {
      out[2 * i] = pts[i].value.real();
      out[2 * i + 1] = pts[i].value.imag();
    }
    return HC_OK;
  });
}

hc_status hc_blaschke_derivative_sup(const hc_blaschke* b, double* sup, double* argmax_theta) {
  return guarded([&] {
    require(b && sup, "null pointer");
    *sup = b->impl.derivative_sup();
    if (argmax_theta) *argmax_theta = b->impl.derivative_argmax();
    return HC_OK;
  });
}

hc_status hc_blaschke_derivative_inf(const hc_blaschke* b, double* inf) {
  return guarded([&] {
    require(b && inf, "null pointer");
    *inf = b->impl.derivative_inf();
    return HC_OK;
  });
}

hc_status hc_blaschke_derivative_bounds(const hc_blaschke* b, double* lower, double* upper) {
  return guarded([&] {
    require(b && lower && upper, "null pointer");
    auto [lo, hi] = b->impl.derivative_sandwich_bounds();
    *lower = lo;
    *upper = hi;
    return HC_OK;
  });
}

hc_status hc_cexp_create(const hc_blaschke* b, hc_cexp** out) {
  return guarded([&] {
    require(b && out, "null pointer");
    *out = new hc_cexp{hardycexp::CexpOperator(b->impl)};
    return HC_OK;
  });
}

void hc_cexp_destroy(hc_cexp* op) { delete op; }

hc_status hc_cexp_apply_pointwise(const hc_cexp* op, const double* poly, size_t ncoeff,
                                  double z_re, double z_im, double* out_re, double* out_im) {
  return guarded([&] {
    require(op && poly && out_re && out_im, "null pointer");
    hardycexp::AnalyticPoly f(unpack_cplx(poly, ncoeff));
    hardycexp::cplx v = op->impl.apply_pointwise(f, hardycexp::UnitCirclePoint({z_re, z_im}));
    *out_re = v.real();
    *out_im = v.imag();
    return HC_OK;
  });
}

hc_status hc_cexp_apply_fourier(const hc_cexp* op, const double* poly, size_t ncoeff,
                                size_t band, double* out, size_t cap, size_t* out_len) {
  return guarded([&] {
    require(op && poly && out && out_len, "null pointer");
    hardycexp::AnalyticPoly f(unpack_cplx(poly, ncoeff));
    hardycexp::AnalyticPoly g = op->impl.apply_fourier(f, band);
    if (g.coeffs.size() > cap) {
      *out_len = g.coeffs.size();
      throw std::invalid_argument("output buffer too small");
    }
    for (size_t i = 0; i < g.coeffs.size(); ++i) {
      out[2 * i] = g.coeffs[i].real();
      out[2 * i + 1] = g.coeffs[i].imag();
    }
    *out_len = g.coeffs.size();
    return HC_OK;
  });
}

hc_status hc_cexp_partition_residual(const hc_cexp* op, double z_re, double z_im, double* out) {
  return guarded([&] {
    require(op && out, "null pointer");
    *out = op->impl.partition_of_unity_residual(hardycexp::UnitCirclePoint({z_re, z_im}));
    return HC_OK;
  });
}

hc_status hc_cexp_theoretical_norm(const hc_cexp* op, double p, double* out) {
  return guarded([&] {
    require(op && out, "null pointer");
    *out = op->impl.theoretical_norm(p);
    return HC_OK;
  });
}

hc_status hc_cexp_empirical_norm(const hc_cexp* op, double p, const double* schedule,
                                 size_t entries, char** csv_out, double* best_ratio) {
  return guarded([&] {
    require(op && best_ratio, "null pointer");
    require(entries == 0 || schedule != nullptr, "null schedule");
    std::vector<hardycexp::ScheduleEntry> sched;
    if (entries == 0) {
      sched = hardycexp::CexpOperator::default_schedule();
    } else {
      for (size_t i = 0; i < entries; ++i)
        sched.push_back({schedule[3 * i], schedule[3 * i + 1], schedule[3 * i + 2]});
    }
    std::vector<hardycexp::SweepRow> rows;
    *best_ratio = op->impl.empirical_norm_lower_bound(p, sched, csv_out ? &rows : nullptr);
    if (csv_out) {
      std::ostringstream os;
      os.precision(17);
      os << "t,half_width,delta,ratio,theoretical\n";
      for (const auto& r : rows)
        os << r.t << ',' << r.half_width << ',' << r.delta << ',' << r.ratio << ','
           << r.theoretical << '\n';
      *csv_out = dup_string(os.str());
    }
    return HC_OK;
  });
}

hc_status hc_multiplier_classify(const char* gamma_json, double p, int with_witness,
                                 uint64_t seed, char** verdict_json) {
  return guarded([&] {
    require(gamma_json && verdict_json, "null pointer");
    hardycexp::IndexSet gamma = hardycexp::IndexSet::from_json(gamma_json);
    hardycexp::Verdict v = hardycexp::classify(gamma, p, with_witness != 0, 16, seed);
    *verdict_json = dup_string(v.to_json());
    return HC_OK;
  });
}

hc_status hc_multiplier_apply(const char* gamma_json, const char* poly_json, char** out_json) {
  return guarded([&] {
    require(gamma_json && poly_json && out_json, "null pointer");
    hardycexp::IndexSet gamma = hardycexp::IndexSet::from_json(gamma_json);
    hardycexp::MultiPoly f = hardycexp::MultiPoly::from_json(poly_json);
    *out_json = dup_string(hardycexp::apply_multiplier(gamma, f).to_json());
    return HC_OK;
  });
}

hc_status hc_multiplier_falsify(const char* gamma_json, double p, unsigned budget, uint64_t seed,
                                char** out_json) {
  return guarded([&] {
    require(gamma_json && out_json, "null pointer");
    hardycexp::IndexSet gamma = hardycexp::IndexSet::from_json(gamma_json);
    hardycexp::FalsifierResult r = hardycexp::falsify_contractivity(gamma, p, budget, seed);
    std::ostringstream os;
    os.precision(17);
    os << "{\"ratio\":" << r.ratio << ",\"conclusive\":" << (r.conclusive ? "true" : "false")
       << ",\"witness\":" << r.best.to_json() << "}";
    *out_json = dup_string(os.str());
    return HC_OK;
  });
}

hc_status hc_coefficient_constant(double p, double* out) {
  return guarded([&] {
    require(out != nullptr, "null pointer");
    *out = hardycexp::coefficient_constant(p);
    return HC_OK;
  });
}

hc_status hc_dirichlet_classify(const uint64_t* members, size_t count, uint64_t bound,
                                char** verdict_json) {
  return guarded([&] {
    require(verdict_json && (members || count == 0), "null pointer");
    std::set<unsigned long long> set(members, members + count);
    hardycexp::Verdict v = hardycexp::dirichlet_set_classify(set, bound);
    *verdict_json = dup_string(v.to_json());
    return HC_OK;
  });
}

hc_status hc_verify_all(uint64_t seed, char** report, int* all_pass) {
  return guarded([&] {
    require(all_pass != nullptr, "null pointer");
    auto checks = hardycexp::verify_all(seed);
    bool ok = true;
    std::ostringstream os;
    for (const auto& c : checks) {
      ok = ok && c.pass;
      os << c.to_json() << '\n';
    }
    *all_pass = ok ? 1 : 0;
    if (report) *report = dup_string(os.str());
    return HC_OK;
  });
}

}  // extern "C"
