#include "pwp/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pwp/error.hpp"
#include "pwp/transform.hpp"

namespace pwp::analytic {

std::string_view to_string(CrossingMethod m) {
  return m == CrossingMethod::analytic ? "analytic" : "bisection";
}

namespace {

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidArgument("lambda must be positive");
}

void check_vertex(std::size_t n, std::size_t j) {
  if (n < 2) throw IndexError("L_n needs n >= 2");
  if (j < 1 || j > n) throw IndexError("vertex " + std::to_string(j) + " outside [1, " + std::to_string(n) + "]");
}

// λ^m / m! for m = 0..max_m.
std::vector<double> taylor_terms(double lambda, std::size_t max_m) {
  std::vector<double> t(max_m + 1);
  t[0] = 1.0;
  for (std::size_t m = 1; m <= max_m; ++m) t[m] = t[m - 1] * lambda / static_cast<double>(m);
  return t;
}

// Multiplicity of λ^m/m! in e_+^λ·I_j on L_n: one path of length m on each
// side of j that is long enough.
int importance_coefficient(std::size_t n, std::size_t j, std::size_t m) {
  return static_cast<int>(m <= j - 1) + static_cast<int>(m <= n - j);
}

}  // namespace

double linear_importance(std::size_t n, std::size_t j, double lambda) {
  check_vertex(n, j);
  check_lambda(lambda);
  const auto t = taylor_terms(lambda, n - 1);
  double s = 0.0;
  if (j == 1 || j == n) {
    for (std::size_t m = 1; m <= n - 1; ++m) s += t[m];
  } else {
    // Mirror vertices j and n+1−j share the same short/long side lengths.
    const std::size_t short_side = std::min(j - 1, n - j);
    const std::size_t long_side = std::max(j - 1, n - j);
    for (std::size_t m = 1; m <= short_side; ++m) s += 2.0 * t[m];
    for (std::size_t m = short_side + 1; m <= long_side; ++m) s += t[m];
  }
  return s / eplus(lambda);
}

double linear_importance_difference(std::size_t n, std::size_t i, std::size_t j, double lambda) {
  check_vertex(n, i);
  check_vertex(n, j);
  check_lambda(lambda);
  const auto t = taylor_terms(lambda, n - 1);
  double s = 0.0;
  for (std::size_t m = 1; m <= n - 1; ++m) {
    const int c = importance_coefficient(n, i, m) - importance_coefficient(n, j, m);
    if (c != 0) s += c * t[m];
  }
  return s / eplus(lambda);
}

double linear_influence(std::size_t n, std::size_t i, double lambda) {
  check_vertex(n, i);
  check_lambda(lambda);
  if (i == n) return 0.0;
  const auto t = taylor_terms(lambda, n - i);
  double s = 0.0;
  for (std::size_t m = 1; m <= n - i; ++m) s += t[m];
  return s / eplus(lambda);
}

CrossingPoint crossing_consecutive(std::size_t n, std::size_t i) {
  const std::size_t k = half_size(n);
  if (n < 3 || i < 1 || i + 1 > k) {
    throw IndexError("consecutive crossing c_{i,i+1} needs 1 <= i <= k-1 (n=" + std::to_string(n) +
                     ", i=" + std::to_string(i) + ")");
  }
  const double log_ratio = std::lgamma(static_cast<double>(n - i + 1)) - std::lgamma(static_cast<double>(i + 1));
  const double lambda = std::exp(log_ratio / static_cast<double>(n - 2 * i));
  return {i, i + 1, lambda, CrossingMethod::analytic};
}

double circuit_indirect(std::size_t n, std::size_t k, double lambda, double tol) {
  if (n < 2) throw IndexError("Z_n needs n >= 2");
  if (k < 1 || k > n) throw IndexError("offset k outside [1, n]");
  check_lambda(lambda);
  if (!(tol > 0.0)) throw InvalidArgument("tol must be positive");
  double term = 1.0;  // λ^m / m!
  double sum = 0.0;
  double first = 0.0;
  for (std::size_t m = 1;; ++m) {
    term *= lambda / static_cast<double>(m);
    if (m < k || (m - k) % n != 0) continue;
    if (m == k) first = term;
    sum += term;
    // Past the peak the terms fall super-geometrically.
    if (static_cast<double>(m) > lambda && term < tol * std::max(sum, first)) break;
    if (term == 0.0) break;
  }
  return sum / eplus(lambda);
}

CircuitScores circuit_scores(std::size_t n, double lambda, double tol) {
  double total = 0.0;
  for (std::size_t k = 1; k <= n; ++k) total += circuit_indirect(n, k, lambda, tol);
  return {ScoreVector{ScoreKind::importance, std::vector<double>(n, 2.0 * total), lambda},
          ScoreVector{ScoreKind::influence, std::vector<double>(n, total), lambda}};
}

}  // namespace pwp::analytic
