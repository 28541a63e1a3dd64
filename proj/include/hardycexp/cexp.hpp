#ifndef HARDYCEXP_CEXP_HPP
#define HARDYCEXP_CEXP_HPP

#include <map>
#include <memory>
#include <vector>

#include "hardycexp/blaschke.hpp"
#include "hardycexp/hardy.hpp"

namespace hardycexp {

// One fiber point: its angle on the circle and the averaging weight
// 1/|eta'(w)|.
struct FiberPoint {
  double theta;
  cplx point;
  double weight;
};

struct ScheduleEntry {
  double t;
  double half_width;
  double delta;
};

struct SweepRow {
  double t;
  double half_width;
  double delta;
  double ratio;
  double theoretical;
};

// Conditional expectation E(.|eta) for a finite Blaschke product with
// eta(0) = 0. Fiber tables are cached per grid size; after construction
// the operator is immutable up to that cache.
class CexpOperator {
 public:
  explicit CexpOperator(BlaschkeProduct product);

  const BlaschkeProduct& product() const { return product_; }

  // Fiber of z: the k preimages of eta(z) with weights 1/|eta'(w)|.
  std::vector<FiberPoint> fiber(const UnitCirclePoint& z) const;

  // Fiber tables for every node of a grid (cached).
  const std::vector<std::vector<FiberPoint>>& fiber_table(std::size_t grid_n) const;

  cplx apply_pointwise(const AnalyticPoly& f, const UnitCirclePoint& z) const;
  cplx apply_pointwise(const BoundarySamples& f, const UnitCirclePoint& z) const;

  // L^2 route: sum_{k=0}^{band} <f, eta^k> eta^k expanded as a polynomial.
  // residual_out, when non-null, receives ||f - reconstruction||_2 over
  // the quadrature grid (a band-too-small diagnostic).
  AnalyticPoly apply_fourier(const AnalyticPoly& f, std::size_t band,
                             double* residual_out = nullptr) const;

  double partition_of_unity_residual(const UnitCirclePoint& z) const;

  double theoretical_norm(double p) const;

  // Max over the schedule of ||E(f_t|eta)||_p / ||f_t||_p with f_t the
  // outer function whose modulus is a smoothed arc indicator centered at
  // the argmax of |eta'|. rows_out, when non-null, receives one row per
  // schedule entry.
  double empirical_norm_lower_bound(double p, const std::vector<ScheduleEntry>& schedule,
                                    std::vector<SweepRow>* rows_out = nullptr) const;

  static std::vector<ScheduleEntry> default_schedule();

 private:
  BlaschkeProduct product_;
  mutable std::map<std::size_t, std::vector<std::vector<FiberPoint>>> tables_;
};

// |integral_T f |eta'| dm - integral_T (sum over fibers of f) dm|.
double change_of_variables_residual(const BlaschkeProduct& b, const BoundarySamples& f);

// Birkhoff-James orthogonality residual integral |g|^{p-2} g conj(f) dm
// for f in Ker E and g in Ran E with min |g| > 1e-3 on the circle.
cplx birkhoff_james_residual(const CexpOperator& op, double p, const AnalyticPoly& f,
                             const AnalyticPoly& g);

// Finite probability space with a partition sub-sigma-algebra.
struct FiniteSpace {
  std::vector<double> weights;
  std::vector<std::vector<std::size_t>> partition;

  FiniteSpace(std::vector<double> w, std::vector<std::vector<std::size_t>> blocks);
};

// Exact operator norm of the conditional expectation onto the partition
// algebra on L^p of the finite space, 0 < p <= 1. Per block the supremum
// is attained at a point mass on the smallest weight.
double finite_space_cexp_norm(const FiniteSpace& space, double p);

}  // namespace hardycexp

#endif
