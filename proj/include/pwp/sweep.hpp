#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pwp/graph.hpp"
#include "pwp/rankings.hpp"
#include "pwp/transform.hpp"

namespace pwp {

enum class SweepParam { lambda, epsilon };
enum class GridSpacing { automatic, linear, logarithmic };

struct SweepSpec {
  SweepParam param = SweepParam::lambda;
  double lo = 0.5;
  double hi = 10.0;
  std::size_t grid_points = 400;
  double refine_tol = 1e-10;
  ScoreKind score_kind = ScoreKind::importance;
  double tie_tol = kDefaultTieTol;
  /// Flips closer than merge_tol·max(1, |x|) form one crossing event.
  double merge_tol = 1e-6;
  /// automatic: logarithmic for λ-sweeps, linear for ε-sweeps.
  GridSpacing spacing = GridSpacing::automatic;
  /// Series settings; `series.lambda` is the fixed λ of an ε-sweep.
  PwpParams series{};

  void validate() const;
  std::vector<double> grid() const;
};

/// One pair whose relative order changes at a crossing, with its own refined
/// location (1-based vertex numbers in `to_string`, 0-based here).
struct PairFlip {
  std::size_t a = 0;
  std::size_t b = 0;
  double at = 0.0;
};

struct Crossing {
  double at = 0.0;
  std::vector<PairFlip> pairs;
  Ranking before;
  Ranking after;

  bool involves(std::size_t a, std::size_t b) const;
};

struct Segment {
  double from = 0.0;
  double to = 0.0;
  Ranking ranking;
};

struct SweepReport {
  SweepParam param = SweepParam::lambda;
  ScoreKind score_kind = ScoreKind::importance;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<Segment> segments;
  std::vector<Crossing> crossings;
  /// Largest spacing between consecutive grid points.
  double grid_resolution = 0.0;
};

using ScoreFunction = std::function<std::vector<double>(double)>;

/// Generic engine: samples `scores` on the spec's grid, refines every ranking
/// change to refine_tol and assembles constant-ranking segments.
SweepReport sweep_scores(const ScoreFunction& scores, const SweepSpec& spec);

/// Indirect scores of T(D, λ) as λ ranges over [lo, hi].
SweepReport lambda_sweep(const Matrix& d, const SweepSpec& spec);

/// Indirect scores of T(D + ε·e_{target,source}, series.lambda) as ε ranges
/// over [lo, hi].
SweepReport epsilon_sweep(const WeightedDigraph& base, Edge edge, const SweepSpec& spec);

struct Root {
  double x = 0.0;
  double fx = 0.0;
  double width = 0.0;  // final bracket width
};

/// Bracketed root of a continuous f with f(a)·f(b) < 0. Bisection,
/// alternating with secant steps kept strictly inside the bracket; stops when
/// the bracket is narrower than tol or f vanishes exactly. Throws NoBracket
/// when f(a) and f(b) share a sign.
Root find_crossing(const std::function<double(double)>& f, double a, double b, double tol);

struct PairCrossings {
  std::size_t i = 0;  // 1-based, i < j <= k
  std::size_t j = 0;
  std::vector<double> locations;
};

struct ConjectureReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<PairCrossings> pairs;
  std::size_t total_crossings = 0;
  bool one_per_pair = false;
  /// c_{il} < c_{jm} whenever i <= j, l <= m and (i, l) != (j, m).
  bool order_holds = false;
};

/// Counts sign changes of I_i − I_j on L_n for every 1 <= i < j <= k over a
/// uniform grid of (0, lambda_hi], refines each one, and checks the ordering
/// of the crossing points.
ConjectureReport verify_unique_crossings(std::size_t n, double lambda_hi, std::size_t grid);

std::string to_string(SweepParam p);

}  // namespace pwp
