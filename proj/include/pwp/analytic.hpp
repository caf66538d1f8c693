#pragma once

#include <cstddef>
#include <string_view>
#include <utility>

#include "pwp/rankings.hpp"

// Closed forms for the directed path L_n (1 -> 2 -> ... -> n) and the
// directed cycle Z_n. Vertex indices are 1-based here, matching the usual
// numbering of these families.
namespace pwp::analytic {

enum class CrossingMethod { analytic, bisection };

struct CrossingPoint {
  std::size_t i = 0;  // i < j, 1-based
  std::size_t j = 0;
  double lambda_star = 0.0;
  CrossingMethod method = CrossingMethod::analytic;
};

std::string_view to_string(CrossingMethod m);

/// Half-size k with n = 2k or n = 2k − 1.
constexpr std::size_t half_size(std::size_t n) { return (n + 1) / 2; }

/// Importance I_j(λ) of vertex j on L_n, normalised by e_+^λ.
double linear_importance(std::size_t n, std::size_t j, double lambda);

/// I_i(λ) − I_j(λ) on L_n with the common terms cancelled exactly before
/// summation, so the sign is reliable even where both values agree to many
/// digits.
double linear_importance_difference(std::size_t n, std::size_t i, std::size_t j, double lambda);

/// Influence F_i(λ) = (λ + λ²/2! + … + λ^{n−i}/(n−i)!) / e_+^λ; F_n = 0.
double linear_influence(std::size_t n, std::size_t i, double lambda);

/// c_{i,i+1} = ((n−i)!/i!)^{1/(n−2i)}, evaluated through log-gamma.
/// Valid for 1 <= i <= k−1.
CrossingPoint crossing_consecutive(std::size_t n, std::size_t i);

/// T_k(λ) on Z_n: (Σ_{l≥0} λ^{k+ln}/(k+ln)!) / e_+^λ, for 1 <= k <= n.
double circuit_indirect(std::size_t n, std::size_t k, double lambda, double tol = 1e-15);

struct CircuitScores {
  ScoreVector importance;
  ScoreVector influence;
};

/// Every vertex of Z_n has influence Σ_k T_k(λ) and importance twice that.
CircuitScores circuit_scores(std::size_t n, double lambda, double tol = 1e-15);

}  // namespace pwp::analytic
