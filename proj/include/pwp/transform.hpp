#pragma once

#include <cstddef>

#include "pwp/error.hpp"
#include "pwp/matrix.hpp"

namespace pwp {

/// e^x − 1 with full relative accuracy near zero.
double eplus(double x);

struct PwpParams {
  double lambda = 1.0;
  double tol = 1e-12;            // relative truncation tolerance
  std::size_t max_terms = 512;   // cap on summed series terms

  /// Throws InvalidArgument unless lambda > 0, tol > 0 and max_terms >= 1.
  void validate() const;
  PwpParams with_lambda(double l) const {
    PwpParams p = *this;
    p.lambda = l;
    return p;
  }
};

/// Matrix of indirect influences T(D, λ) and the λ that produced it.
struct InfluenceMatrix {
  Matrix t;
  double lambda = 0.0;
  std::size_t truncation_terms = 0;
};

/// Raised when max_terms is reached before the tail bound meets the tolerance.
class TruncationNotConverged : public Error {
 public:
  TruncationNotConverged(InfluenceMatrix partial, double achieved_bound, double required_bound);

  const InfluenceMatrix& partial() const noexcept { return partial_; }
  double achieved_bound() const noexcept { return achieved_bound_; }
  double required_bound() const noexcept { return required_bound_; }
  double lambda() const noexcept { return partial_.lambda; }

 private:
  InfluenceMatrix partial_;
  double achieved_bound_;
  double required_bound_;
};

/// T(D, λ) = (Σ_{k≥1} D^k λ^k / k!) / (e^λ − 1), summed directly.
///
/// Summation stops after term K once the a-priori bound (‖D‖_∞ λ)^{K+1}/(K+1)!
/// on the first omitted term is below tol·(‖partial sum‖_∞ + 1) and the terms
/// are past their peak, or as soon as D^{K+1} vanishes (nilpotent D, exact).
InfluenceMatrix pwp_transform(const Matrix& d, const PwpParams& params);

/// pwp_transform(c·D, params). Equals (e_+^{cλ}/e_+^λ)·T(D, cλ).
InfluenceMatrix pwp_rescaled(const Matrix& d, double c, const PwpParams& params);

}  // namespace pwp
