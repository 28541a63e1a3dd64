#ifndef HARDYCEXP_MULTIPLIERS_HPP
#define HARDYCEXP_MULTIPLIERS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hardycexp/hardy.hpp"

namespace hardycexp {

// Gamma, a set of multi-indices, either symbolically as
// N_J = { alpha : alpha_j = 0 for all j in J } (J holds 1-based
// coordinates, d may be infinite), or as an explicit member list that is
// exhaustive within a per-coordinate box.
struct IndexSet {
  enum class Kind { Symbolic, Explicit };

  Kind kind;
  std::size_t d = 1;         // ignored when infinite_dimension
  bool infinite_dimension = false;  // symbolic only
  std::set<std::size_t> J;   // symbolic: killed coordinates, 1-based
  std::vector<unsigned> box; // explicit: inclusive degree bound per coordinate
  std::set<std::vector<unsigned>> members;  // explicit

  static IndexSet symbolic(std::size_t d, std::set<std::size_t> J);
  static IndexSet symbolic_infinite(std::set<std::size_t> J);
  static IndexSet explicit_set(std::vector<unsigned> box, std::set<std::vector<unsigned>> members);

  bool contains(const std::vector<unsigned>& alpha) const;
  bool in_box(const std::vector<unsigned>& alpha) const;  // explicit only

  std::string to_json() const;
  static IndexSet from_json(const std::string& text);
};

enum class VerdictStatus { Contractive, NotContractive, UndecidableFromTruncation };

struct Verdict {
  VerdictStatus status;
  std::string reason;
  std::optional<MultiPoly> witness;
  std::optional<double> witness_ratio;

  std::string to_json() const;
};

struct StructuralCheck {
  std::string name;
  bool pass;
  std::string counterexample;  // empty when pass
};

struct FalsifierResult {
  MultiPoly best;
  double ratio;
  bool conclusive;  // ratio > 1
};

MultiPoly apply_multiplier(const IndexSet& gamma, const MultiPoly& f);

// (a) 0 in Gamma, (b) semigroup closure within the box, (c) ray
// completion within the box, (d) equality with N_{J*} within the box.
std::vector<StructuralCheck> structural_checks(const IndexSet& gamma);

Verdict classify(const IndexSet& gamma, double p, bool with_witness = false,
                 unsigned budget = 16, std::uint64_t seed = 1);

// Random-restart Nelder-Mead search for f with ||P_Gamma f||_p > ||f||_p.
// The template is supported on Gamma dilated by L-inf radius 3 within the
// box. budget counts restarts; deterministic for a fixed seed.
FalsifierResult falsify_contractivity(const IndexSet& gamma, double p, unsigned budget,
                                      std::uint64_t seed);

// c(1,p) = sqrt(2/p) (1 - p/2)^{1/p - 1/2}.
double coefficient_constant(double p);

// |hat f_c(1)| / ||f_c||_p for f_c = (1+cz)^{2/p}, closed form.
double coefficient_ratio_family(double p, double c);

// Same quantity with ||f_c||_p computed by quadrature of the truncated
// binomial series; agrees with the closed form to 1e-8.
double coefficient_ratio_family_quadrature(double p, double c);

// Prime-exponent vector of n over the ordered primes, trailing zeros
// trimmed (empty for n = 1).
std::vector<unsigned> bohr_exponents(unsigned long long n);

Verdict dirichlet_set_classify(const std::set<unsigned long long>& members,
                               unsigned long long bound);

}  // namespace hardycexp

#endif
