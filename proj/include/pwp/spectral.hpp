#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pwp/error.hpp"
#include "pwp/matrix.hpp"
#include "pwp/rankings.hpp"
#include "pwp/transform.hpp"

namespace pwp {

/// D = A·diag(d)·A⁻¹ with real eigenvalues sorted ascending.
struct RealSpectrum {
  std::vector<double> eigenvalues;
  Matrix basis;
  Matrix basis_inverse;
  double condition_estimate = 1.0;  // ‖A‖_F·‖A⁻¹‖_F
};

class NotRealDiagonalizable : public Error {
 public:
  explicit NotRealDiagonalizable(std::vector<double> imaginary_parts);
  const std::vector<double>& imaginary_parts() const noexcept { return imag_; }

 private:
  std::vector<double> imag_;
};

inline constexpr double kDefaultReconstructionTol = 1e-9;

/// Symmetric input goes through a self-adjoint solver (orthogonal basis);
/// anything else through the general real solver. Throws
/// NotRealDiagonalizable for eigenvalues with a significant imaginary part and
/// IllConditionedBasis when the basis is numerically singular or fails to
/// reconstruct D within `reconstruction_tol` (relative Frobenius).
RealSpectrum real_eigendecomposition(const Matrix& d, double reconstruction_tol = kDefaultReconstructionTol);

/// A·diag(e_+^{d_i λ}/e_+^λ)·A⁻¹.
InfluenceMatrix pwp_transform_spectral(const RealSpectrum& spec, double lambda);

struct ExpTerm {
  double coefficient = 0.0;
  double rate = 0.0;
};

/// λ ↦ Σ_r a_r·e_+^{d_r λ}, rates strictly increasing, no zero coefficients.
struct ExpSum {
  std::vector<ExpTerm> terms;

  bool empty() const noexcept { return terms.empty(); }
  /// a = Σ a_r, the constant of the equivalent form Σ a_r e^{d_r λ} = a.
  double constant() const noexcept;
  double evaluate(double lambda) const;
  /// Sign-preserving evaluation scaled by e^{−max(0, max d_r)·λ}, finite for
  /// large λ where `evaluate` would overflow.
  double evaluate_scaled(double lambda) const;
};

/// Coefficients of e_+^λ·(score_i(λ) − score_j(λ)) over the distinct
/// eigenvalues. Rates within 1e−9·max|d| are merged; terms with rate 0
/// vanish identically and are dropped, as are coefficients below
/// 1e−12·n·max|A|·max|A⁻¹|. Vertices are 0-based.
ExpSum score_difference_expsum(const RealSpectrum& spec, ScoreKind kind, std::size_t i, std::size_t j);

struct RootIsolation {
  std::vector<double> roots;
  /// No root exists beyond this value (dominance of the top-rate term).
  double lambda_max = 0.0;
};

/// Sign-change roots of the ExpSum on [lo, hi] at `grid` uniform points, each
/// refined to tol, plus the dominance bound lambda_max. Throws Degenerate for
/// an empty ExpSum (the two scores are identical for every λ).
RootIsolation isolate_roots(const ExpSum& e, double lo, double hi, std::size_t grid, double tol = 1e-12);

/// Smallest λ ≥ 0 beyond which the largest-rate exponential dominates all
/// others in Σ a_r e^{d_r λ} − a. Throws Degenerate for an empty ExpSum.
double dominance_bound(const ExpSum& e);

enum class Engine { series, spectral };

struct AutoTransform {
  InfluenceMatrix result;
  Engine engine = Engine::series;
  std::string warning;  // set when the spectral path was refused
};

/// Spectral evaluation when D is real-diagonalizable, otherwise the series.
AutoTransform pwp_transform_auto(const Matrix& d, const PwpParams& params);

}  // namespace pwp
