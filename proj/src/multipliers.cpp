#include "hardycexp/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "hardycexp/blaschke.hpp"
#include "hardycexp/fft.hpp"
#include "json.hpp"

namespace hardycexp {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string alpha_str(const std::vector<unsigned>& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

// Enumerate all multi-indices within the box in lexicographic order.
void for_each_in_box(const std::vector<unsigned>& box,
                     const std::function<void(const std::vector<unsigned>&)>& fn) {
  std::vector<unsigned> alpha(box.size(), 0);
  while (true) {
    fn(alpha);
    std::size_t j = box.size();
    while (j-- > 0) {
      if (alpha[j] < box[j]) {
        ++alpha[j];
        break;
      }
      alpha[j] = 0;
      if (j == 0) return;
    }
  }
}

}  // namespace

IndexSet IndexSet::symbolic(std::size_t d, std::set<std::size_t> J) {
  IndexSet out;
  out.kind = Kind::Symbolic;
  out.d = d;
  out.J = std::move(J);
  for (std::size_t j : out.J)
    if (j < 1 || j > d) throw std::invalid_argument("IndexSet: J index outside 1..d");
  return out;
}

IndexSet IndexSet::symbolic_infinite(std::set<std::size_t> J) {
  IndexSet out;
  out.kind = Kind::Symbolic;
  out.infinite_dimension = true;
  out.J = std::move(J);
  for (std::size_t j : out.J)
    if (j < 1) throw std::invalid_argument("IndexSet: J indices are 1-based");
  return out;
}

IndexSet IndexSet::explicit_set(std::vector<unsigned> box,
                                std::set<std::vector<unsigned>> members) {
  IndexSet out;
  out.kind = Kind::Explicit;
  out.box = std::move(box);
  out.d = out.box.size();
  if (out.d == 0) throw std::invalid_argument("IndexSet: empty box");
  out.members = std::move(members);
  for (const auto& m : out.members)
    if (!out.in_box(m)) throw std::invalid_argument("IndexSet: member outside box");
  return out;
}

bool IndexSet::in_box(const std::vector<unsigned>& alpha) const {
  if (alpha.size() != box.size()) return false;
  for (std::size_t j = 0; j < box.size(); ++j)
    if (alpha[j] > box[j]) return false;
  return true;
}

bool IndexSet::contains(const std::vector<unsigned>& alpha) const {
  if (kind == Kind::Symbolic) {
    for (std::size_t j : J)
      if (j - 1 < alpha.size() && alpha[j - 1] != 0) return false;
    return true;
  }
  return members.count(alpha) > 0;
}

std::string IndexSet::to_json() const {
  nlohmann::json j;
  if (kind == Kind::Symbolic) {
    j["kind"] = "symbolic";
    if (infinite_dimension)
      j["d"] = "infinite";
    else
      j["d"] = d;
    j["J"] = J;
  } else {
    j["kind"] = "explicit";
    j["d"] = d;
    j["box"] = box;
    j["members"] = nlohmann::json::array();
    for (const auto& m : members) j["members"].push_back(m);
  }
  return j.dump();
}

IndexSet IndexSet::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "symbolic") {
    std::set<std::size_t> J;
    for (const auto& x : j.at("J")) J.insert(x.get<std::size_t>());
    if (j.at("d").is_string()) {
      if (j.at("d").get<std::string>() != "infinite")
        throw std::invalid_argument("IndexSet: d must be a number or \"infinite\"");
      return symbolic_infinite(std::move(J));
    }
    return symbolic(j.at("d").get<std::size_t>(), std::move(J));
  }
  if (kind == "explicit") {
    std::set<std::vector<unsigned>> members;
    for (const auto& m : j.at("members")) members.insert(m.get<std::vector<unsigned>>());
    return explicit_set(j.at("box").get<std::vector<unsigned>>(), std::move(members));
  }
  throw std::invalid_argument("IndexSet: unknown kind " + kind);
}

std::string Verdict::to_json() const {
  nlohmann::json j;
  switch (status) {
    case VerdictStatus::Contractive: j["status"] = "Contractive"; break;
    case VerdictStatus::NotContractive: j["status"] = "NotContractive"; break;
    case VerdictStatus::UndecidableFromTruncation: j["status"] = "UndecidableFromTruncation"; break;
  }
  j["reason"] = reason;
  if (witness) {
    j["witness"] = {{"poly", nlohmann::json::parse(witness->to_json())},
                    {"ratio", witness_ratio.value_or(0.0)}};
  }
  return j.dump();
}

MultiPoly apply_multiplier(const IndexSet& gamma, const MultiPoly& f) {
  MultiPoly out(f.d);
  for (const auto& [alpha, c] : f.terms) {
    if (gamma.kind == IndexSet::Kind::Explicit && !gamma.in_box(alpha))
      throw std::invalid_argument("apply_multiplier: support of f outside the box of Gamma");
    if (gamma.contains(alpha)) out.set(alpha, c);
  }
  return out;
}

std::vector<StructuralCheck> structural_checks(const IndexSet& gamma) {
  if (gamma.kind != IndexSet::Kind::Explicit)
    throw std::invalid_argument("structural_checks: explicit representation required");
  std::vector<StructuralCheck> out;
  const std::vector<unsigned> zero(gamma.d, 0);

  out.push_back({"zero-element", gamma.members.count(zero) > 0,
                 gamma.members.count(zero) ? "" : "0 not in Gamma"});

  StructuralCheck semigroup{"semigroup-closure", true, ""};
  for (const auto& a : gamma.members) {
    for (const auto& b : gamma.members) {
      std::vector<unsigned> s(gamma.d);
      for (std::size_t j = 0; j < gamma.d; ++j) s[j] = a[j] + b[j];
      if (gamma.in_box(s) && !gamma.members.count(s)) {
        semigroup.pass = false;
        semigroup.counterexample = alpha_str(a) + " + " + alpha_str(b) + " = " + alpha_str(s) +
                                   " not in Gamma";
        break;
      }
    }
    if (!semigroup.pass) break;
  }
  out.push_back(semigroup);

  StructuralCheck ray{"ray-completion", true, ""};
  for (const auto& beta : gamma.members) {
    for (std::size_t i = 0; i < gamma.d && ray.pass; ++i) {
      if (beta[i] == 0) continue;
      std::vector<unsigned> probe = beta;
      for (unsigned k = 0; k <= gamma.box[i]; ++k) {
        probe[i] = k;
        if (!gamma.members.count(probe)) {
          ray.pass = false;
          std::ostringstream os;
          os << "beta = " << alpha_str(beta) << ", coordinate " << (i + 1) << ", k = " << k
             << ": " << alpha_str(probe) << " not in Gamma";
          ray.counterexample = os.str();
          break;
        }
      }
    }
    if (!ray.pass) break;
  }
  out.push_back(ray);

  // equality with N_{J*} inside the box
  std::set<std::size_t> jstar;
  for (std::size_t j = 0; j < gamma.d; ++j) {
    bool all_zero = true;
    for (const auto& m : gamma.members)
      if (m[j] != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) jstar.insert(j + 1);
  }
  StructuralCheck eq{"matches-NJ-in-box", true, ""};
  for_each_in_box(gamma.box, [&](const std::vector<unsigned>& alpha) {
    if (!eq.pass) return;
    bool in_nj = true;
    for (std::size_t j : jstar)
      if (alpha[j - 1] != 0) {
        in_nj = false;
        break;
      }
    if (in_nj && !gamma.members.count(alpha)) {
      eq.pass = false;
      eq.counterexample = alpha_str(alpha) + " in N_J* but missing from Gamma";
    }
  });
  out.push_back(eq);
  return out;
}

namespace {

std::set<std::size_t> explicit_jstar(const IndexSet& gamma) {
  std::set<std::size_t> jstar;
  for (std::size_t j = 0; j < gamma.d; ++j) {
    bool all_zero = true;
    for (const auto& m : gamma.members)
      if (m[j] != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) jstar.insert(j + 1);
  }
  return jstar;
}

std::string jset_str(const std::set<std::size_t>& J) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t j : J) {
    if (!first) os << ", ";
    os << j;
    first = false;
  }
  os << '}';
  return os.str();
}

// ---- Nelder-Mead over the real/imag parts of template coefficients ----

struct RatioObjective {
  std::vector<std::vector<unsigned>> support;
  std::vector<bool> kept;
  std::size_t d;
  std::size_t nodes;
  double p;
  // z^alpha over the tensor grid, one row per support index
  std::vector<std::vector<cplx>> monomials;

  RatioObjective(const IndexSet& gamma, double p_in) : p(p_in) {
    std::vector<unsigned> box;
    if (gamma.kind == IndexSet::Kind::Explicit) {
      d = gamma.d;
      box = gamma.box;
    } else {
      if (gamma.infinite_dimension || gamma.d > 3)
        throw std::invalid_argument(
            "falsify_contractivity: numeric search needs finite dimension <= 3");
      d = gamma.d;
      box.assign(d, 4);
    }
    // support: Gamma within the box, dilated by L-inf radius 3
    constexpr unsigned radius = 3;
    std::set<std::vector<unsigned>> sup;
    for_each_in_box(box, [&](const std::vector<unsigned>& alpha) {
      if (!gamma.contains(alpha)) return;
      std::vector<long> lo(d), hi(d);
      for (std::size_t j = 0; j < d; ++j) {
        lo[j] = std::max<long>(0, static_cast<long>(alpha[j]) - radius);
        hi[j] = std::min<long>(box[j], static_cast<long>(alpha[j]) + radius);
      }
      std::vector<unsigned> probe(d);
      std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == d) {
          sup.insert(probe);
          return;
        }
        for (long v = lo[j]; v <= hi[j]; ++v) {
          probe[j] = static_cast<unsigned>(v);
          rec(j + 1);
        }
      };
      rec(0);
    });
    support.assign(sup.begin(), sup.end());
    if (support.empty()) throw std::invalid_argument("falsify_contractivity: empty template");
    kept.resize(support.size());
    for (std::size_t i = 0; i < support.size(); ++i) kept[i] = gamma.contains(support[i]);

    unsigned maxdeg = 0;
    for (unsigned b : box) maxdeg = std::max(maxdeg, b);
    const std::size_t per_dim =
        d == 1 ? 1024 : next_power_of_two(std::max<std::size_t>(4 * (maxdeg + 1), 32));
    nodes = 1;
    for (std::size_t j = 0; j < d; ++j) nodes *= per_dim;
    monomials.assign(support.size(), std::vector<cplx>(nodes));
    for (std::size_t q = 0; q < nodes; ++q) {
      std::vector<cplx> z(d);
      std::size_t rem = q;
      for (std::size_t j = d; j-- > 0;) {
        const std::size_t idx = rem % per_dim;
        rem /= per_dim;
        z[j] = std::polar(1.0, kTwoPi * static_cast<double>(idx) / static_cast<double>(per_dim));
      }
      for (std::size_t i = 0; i < support.size(); ++i) {
        cplx t(1.0, 0.0);
        for (std::size_t j = 0; j < d; ++j)
          for (unsigned e = 0; e < support[i][j]; ++e) t *= z[j];
        monomials[i][q] = t;
      }
    }
  }

  std::size_t nparams() const { return 2 * support.size(); }

  double ratio(const std::vector<double>& x) const {
    double nf = 0.0, ng = 0.0;
    for (std::size_t q = 0; q < nodes; ++q) {
      cplx f(0.0, 0.0), g(0.0, 0.0);
      for (std::size_t i = 0; i < support.size(); ++i) {
        const cplx term = cplx(x[2 * i], x[2 * i + 1]) * monomials[i][q];
        f += term;
        if (kept[i]) g += term;
      }
      nf += std::pow(std::abs(f), p);
      ng += std::pow(std::abs(g), p);
    }
    if (nf < 1e-300) return 0.0;
    return std::pow(ng / nf, 1.0 / p);
  }

  MultiPoly to_poly(const std::vector<double>& x) const {
    MultiPoly out(d);
    for (std::size_t i = 0; i < support.size(); ++i) {
      const cplx c(x[2 * i], x[2 * i + 1]);
      if (std::abs(c) > 1e-12) out.set(support[i], c);
    }
    return out;
  }
};

// Standard Nelder-Mead minimization; returns the best point found.
std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& fn,
                                std::vector<double> x0, std::size_t max_evals) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += (x0[i] != 0.0 ? 0.1 * x0[i] : 0.1);
  std::size_t evals = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    vals[i] = fn(pts[i]);
    ++evals;
  }
  auto order = [&] {
    std::vector<std::size_t> idx(n + 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::vector<std::vector<double>> p2(n + 1);
    std::vector<double> v2(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      p2[i] = pts[idx[i]];
      v2[i] = vals[idx[i]];
    }
    pts = std::move(p2);
    vals = std::move(v2);
  };
  order();
  while (evals < max_evals) {
    if (std::abs(vals[n] - vals[0]) < 1e-12) break;
    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j] / static_cast<double>(n);
    auto combine = [&](double t) {
      std::vector<double> x(n);
      for (std::size_t j = 0; j < n; ++j) x[j] = centroid[j] + t * (pts[n][j] - centroid[j]);
      return x;
    };
    auto xr = combine(-1.0);
    const double fr = fn(xr);
    ++evals;
    if (fr < vals[0]) {
      auto xe = combine(-2.0);
      const double fe = fn(xe);
      ++evals;
      if (fe < fr) {
        pts[n] = xe;
        vals[n] = fe;
      } else {
        pts[n] = xr;
        vals[n] = fr;
      }
    } else if (fr < vals[n - 1]) {
      pts[n] = xr;
      vals[n] = fr;
    } else {
      auto xc = combine(fr < vals[n] ? -0.5 : 0.5);
      const double fc = fn(xc);
      ++evals;
      if (fc < std::min(fr, vals[n])) {
        pts[n] = xc;
        vals[n] = fc;
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t j = 0; j < n; ++j) pts[i][j] = 0.5 * (pts[i][j] + pts[0][j]);
          vals[i] = fn(pts[i]);
          ++evals;
        }
      }
    }
    order();
  }
  return pts[0];
}

unsigned long long binomial(unsigned n, unsigned k) {
  unsigned long long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

FalsifierResult falsify_contractivity(const IndexSet& gamma, double p, unsigned budget,
                                      std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("falsify_contractivity: p must lie in (0,1)");
  RatioObjective obj(gamma, p);
  const std::size_t np = obj.nparams();
  const std::size_t max_evals = std::min<std::size_t>(400 * np, 20000);

  double best_ratio = 0.0;
  std::vector<double> best_x(np, 0.0);
  for (unsigned restart = 0; restart < std::max(1u, budget); ++restart) {
    std::seed_seq seq{static_cast<std::uint64_t>(seed), static_cast<std::uint64_t>(restart)};
    std::mt19937_64 rng(seq);
    std::vector<double> x0(np, 0.0);
    if (restart == 0) {
      // binomial concentration profile prod_j C(D, alpha_j) on the support
      unsigned maxdeg = 0;
      for (const auto& s : obj.support)
        for (std::size_t j = 0; j < obj.d; ++j) maxdeg = std::max(maxdeg, s[j]);
      for (std::size_t i = 0; i < obj.support.size(); ++i) {
        double c = 1.0;
        for (std::size_t j = 0; j < obj.d; ++j)
          c *= static_cast<double>(binomial(maxdeg, obj.support[i][j]));
        x0[2 * i] = c;
      }
      // normalize to keep the simplex well scaled
      double m = 0.0;
      for (double v : x0) m = std::max(m, std::abs(v));
      for (double& v : x0) v /= m;
    } else {
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (double& v : x0) v = gauss(rng);
    }
    auto x = nelder_mead([&](const std::vector<double>& v) { return -obj.ratio(v); }, x0, max_evals);
    const double r = obj.ratio(x);
    if (r > best_ratio) {
      best_ratio = r;
      best_x = x;
    }
  }
  return {obj.to_poly(best_x), best_ratio, best_ratio > 1.0};
}

Verdict classify(const IndexSet& gamma, double p, bool with_witness, unsigned budget,
                 std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("classify: p must lie in (0,1)");
  if (gamma.kind == IndexSet::Kind::Symbolic) {
    return {VerdictStatus::Contractive,
            "Gamma = N_J with J = " + jset_str(gamma.J) + "; P_Gamma is contractive on H^p",
            std::nullopt, std::nullopt};
  }
  const auto jstar = explicit_jstar(gamma);
  const auto checks = structural_checks(gamma);
  const bool consistent = std::all_of(checks.begin(), checks.end(),
                                      [](const StructuralCheck& c) { return c.pass; });
  if (consistent) {
    return {VerdictStatus::UndecidableFromTruncation,
            "consistent with N_J* for J* = " + jset_str(jstar) +
                "; contractivity holds iff the full set equals N_J*",
            std::nullopt, std::nullopt};
  }
  const auto first_fail = std::find_if(checks.begin(), checks.end(),
                                       [](const StructuralCheck& c) { return !c.pass; });
  Verdict v{VerdictStatus::NotContractive,
            first_fail->name + " fails: " + first_fail->counterexample, std::nullopt,
            std::nullopt};
  if (with_witness) {
    auto res = falsify_contractivity(gamma, p, budget, seed);
    if (res.conclusive) {
      v.witness = res.best;
      v.witness_ratio = res.ratio;
    }
  }
  return v;
}

double coefficient_constant(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("coefficient_constant: p must lie in (0,1)");
  return std::sqrt(2.0 / p) * std::pow(1.0 - p / 2.0, 1.0 / p - 0.5);
}

double coefficient_ratio_family(double p, double c) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("coefficient_ratio_family: p must lie in (0,1)");
  if (!(c >= 0.0 && c < 1.0))
    throw std::invalid_argument("coefficient_ratio_family: c must lie in [0,1)");
  return (2.0 * c / p) * std::pow(1.0 + c * c, -1.0 / p);
}

double coefficient_ratio_family_quadrature(double p, double c) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("coefficient_ratio_family_quadrature: p must lie in (0,1)");
  if (c == 0.0) return 0.0;
  // generalized binomial series of (1+cz)^{2/p}, truncated at 1e-14
  std::vector<cplx> coeffs;
  double b = 1.0;
  const double a = 2.0 / p;
  for (std::size_t j = 0;; ++j) {
    coeffs.emplace_back(b, 0.0);
    if (std::abs(b) < 1e-14 && static_cast<double>(j) > a) break;
    if (j > 2000000) throw ConvergenceError("coefficient_ratio_family_quadrature: series too long");
    b *= (a - static_cast<double>(j)) / static_cast<double>(j + 1) * c;
  }
  const double hat1 = std::abs(coeffs.size() > 1 ? coeffs[1].real() : 0.0);
  const std::size_t n = next_power_of_two(std::max<std::size_t>(64, 8 * coeffs.size()));
  coeffs.resize(n, cplx(0.0, 0.0));
  const auto samples = dft_synthesis(coeffs);
  double s = 0.0;
  for (const cplx& v : samples) s += std::pow(std::abs(v), p);
  const double norm = std::pow(s / static_cast<double>(n), 1.0 / p);
  return hat1 / norm;
}

namespace {

// grows a strictly increasing prime list up to at least `upto`
void extend_primes(std::vector<unsigned long long>& primes, unsigned long long upto) {
  for (unsigned long long q = primes.empty() ? 2 : primes.back() + 1; q <= upto; ++q) {
    bool is_prime = true;
    for (unsigned long long r : primes) {
      if (r * r > q) break;
      if (q % r == 0) {
        is_prime = false;
        break;
      }
    }
    if (is_prime) primes.push_back(q);
  }
}

}  // namespace

std::vector<unsigned> bohr_exponents(unsigned long long n) {
  if (n == 0) throw std::invalid_argument("bohr_exponents: n must be >= 1");
  std::vector<std::pair<unsigned long long, unsigned>> factors;
  unsigned long long rem = n;
  for (unsigned long long q = 2; q * q <= rem; ++q) {
    if (rem % q) continue;
    unsigned e = 0;
    while (rem % q == 0) {
      rem /= q;
      ++e;
    }
    factors.emplace_back(q, e);
  }
  if (rem > 1) factors.emplace_back(rem, 1);
  if (factors.empty()) return {};

  thread_local std::vector<unsigned long long> primes;
  extend_primes(primes, factors.back().first);
  const auto index_of = [&](unsigned long long q) {
    return static_cast<std::size_t>(
        std::lower_bound(primes.begin(), primes.end(), q) - primes.begin());
  };
  std::vector<unsigned> out(index_of(factors.back().first) + 1, 0);
  for (const auto& [q, e] : factors) out[index_of(q)] = e;
  return out;
}

Verdict dirichlet_set_classify(const std::set<unsigned long long>& members,
                               unsigned long long bound) {
  if (members.empty()) throw std::invalid_argument("dirichlet_set_classify: empty set");
  for (unsigned long long m : members)
    if (m < 1 || m > bound)
      throw std::invalid_argument("dirichlet_set_classify: member outside [1, bound]");

  // primes up to bound
  std::vector<unsigned long long> primes;
  for (unsigned long long q = 2; q <= bound; ++q) {
    bool is_prime = true;
    for (unsigned long long r = 2; r * r <= q; ++r)
      if (q % r == 0) {
        is_prime = false;
        break;
      }
    if (is_prime) primes.push_back(q);
  }
  std::set<unsigned long long> jstar;
  for (unsigned long long q : primes)
    for (unsigned long long m : members)
      if (m % q == 0) {
        jstar.insert(q);
        break;
      }
  // expected set: integers up to bound whose prime divisors all lie in J*
  auto smooth = [&](unsigned long long n) {
    unsigned long long rem = n;
    for (unsigned long long q : primes) {
      if (q > rem) break;
      if (jstar.count(q))
        while (rem % q == 0) rem /= q;
    }
    return rem == 1;
  };
  for (unsigned long long n = 1; n <= bound; ++n) {
    const bool expected = smooth(n);
    const bool present = members.count(n) > 0;
    if (expected != present) {
      std::ostringstream os;
      if (expected)
        os << "integer " << n << " has all prime divisors in J = " << [&] {
          std::ostringstream js;
          js << '{';
          bool first = true;
          for (auto q : jstar) {
            js << (first ? "" : ", ") << q;
            first = false;
          }
          js << '}';
          return js.str();
        }() << " but is missing from Gamma";
      else
        os << "integer " << n << " is in Gamma but has a prime divisor outside J";
      return {VerdictStatus::NotContractive, os.str(), std::nullopt, std::nullopt};
    }
  }
  std::ostringstream os;
  os << "consistent with J = {";
  bool first = true;
  for (auto q : jstar) {
    os << (first ? "" : ", ") << q;
    first = false;
  }
  os << "} within the bound";
  return {VerdictStatus::UndecidableFromTruncation, os.str(), std::nullopt, std::nullopt};
}

}  // namespace hardycexp
