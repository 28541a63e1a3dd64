#ifndef HARDYCEXP_BLASCHKE_HPP
#define HARDYCEXP_BLASCHKE_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hardycexp {

using cplx = std::complex<double>;

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A boundary point, projected to exact modulus 1.
struct UnitCirclePoint {
  cplx value;

  explicit UnitCirclePoint(cplx v);
  double arg() const;  // principal argument in [0, 2pi)
};

// Finite Blaschke product eta(w) = c * prod_j (w - a_j)/(1 - conj(a_j) w)
// with |a_j| < 1 and |c| = 1. Immutable after construction.
class BlaschkeProduct {
 public:
  // Rejects zeros with |a_j| >= zero_modulus_cap (default 0.999) and
  // renormalizes the rotation to exact modulus 1.
  explicit BlaschkeProduct(std::vector<cplx> zeros, cplx rotation = cplx(1.0, 0.0),
                           double zero_modulus_cap = 0.999);

  const std::vector<cplx>& zeros() const { return zeros_; }
  cplx rotation() const { return rotation_; }
  std::size_t degree() const { return zeros_.size(); }
  bool vanishes_at_origin() const;

  cplx evaluate(cplx w) const;

  // |eta'(e^{i theta})| via the Poisson-kernel sum
  //   sum_j (1 - |a_j|^2) / |1 - conj(a_j) e^{i theta}|^2.
  double boundary_derivative_modulus(double theta) const;

  // The k points on the circle with eta(w) = z, sorted by principal
  // argument (tie-break by real part). min_pairwise_distance, when
  // non-null, receives the smallest distance between returned points;
  // values below 1e-8 indicate clustered roots.
  std::vector<UnitCirclePoint> preimages(const UnitCirclePoint& z,
                                         double* min_pairwise_distance = nullptr) const;

  double derivative_sup() const;
  double derivative_inf() const;
  // Location of the maximum of |eta'| on the circle.
  double derivative_argmax() const;

  // Closed-form sandwich: sum (1-|a|)/(1+|a|) <= |eta'| <= sum (1+|a|)/(1-|a|).
  std::pair<double, double> derivative_sandwich_bounds() const;

  std::string to_json() const;
  static BlaschkeProduct from_json(const std::string& text);

 private:
  std::vector<cplx> zeros_;
  cplx rotation_;

  double extremize_derivative(bool maximize, double* arg_out = nullptr) const;
};

}  // namespace hardycexp

#endif
