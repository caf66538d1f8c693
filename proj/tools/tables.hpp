#pragma once

// Reproduction of the published stability tables: the ε-edge search on L_6
// and C_6, and the consecutive-crossing comparison for L_n.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pwp/graph.hpp"
#include "pwp/sweep.hpp"

namespace pwp::tables {

/// One published row: the ε at which the ranking takes effect (as printed)
/// and the ranking itself.
struct ReferenceRow {
  std::string threshold;  // "0", "0.28", "7", ...
  std::string ranking;
};

const std::vector<ReferenceRow>& linear_reference();
inline constexpr double kReferenceLambda = 1.0;
inline constexpr double kLinearEpsHi = 30.0;

/// Unit in the last printed digit of a decimal string ("0.28" -> 0.01, "7" -> 1).
double last_digit_unit(const std::string& printed);

struct RowCheck {
  std::string threshold;
  std::string expected;
  std::string found;             // empty when the sweep has fewer segments
  std::optional<double> detected;  // crossing that starts this row (none for ε = 0)
  double unit = 0.0;
  bool ranking_ok = false;
  bool threshold_ok = false;
  bool pass() const { return ranking_ok && threshold_ok; }
};

struct LinearCandidate {
  Edge edge;
  SweepReport report;
  double report_refine_tol = 0.0;
  std::size_t matched_prefix = 0;  // leading rows whose ranking matches
  bool sequence_match = false;     // exactly the published sequence of rankings
  std::vector<RowCheck> rows;
  bool all_pass() const;
};

struct LinearSearch {
  std::vector<LinearCandidate> candidates;  // best first
  std::optional<std::size_t> selected;      // index into candidates
};

/// Every edge i -> j (i != j) absent from L_6, swept over ε in [0, 30] at λ = 1.
LinearSearch search_linear_table(std::size_t grid_points = 600);

inline constexpr double kCircuitEps = 1e-4;
inline constexpr double kCircuitEpsHi = 10.0;
inline const char* const kCircuitRanking = "3,6 > 1,2 > 4,5";

struct CircuitCandidate {
  Edge edge;
  std::string ranking_at_eps;  // ranking at ε = 1e-4
  std::size_t segments = 0;    // constant-ranking segments over [1e-4, 10]
  std::string final_ranking;
  bool match() const { return ranking_at_eps == kCircuitRanking && segments == 1; }
};

struct CircuitSearch {
  std::vector<CircuitCandidate> candidates;  // matches first
  std::optional<std::size_t> selected;
};

/// Every edge absent from Z_6: ranking at ε = 1e-4 and stability through ε = 10.
CircuitSearch search_circuit_line(std::size_t grid_points = 200);

struct ConsecutiveRow {
  std::size_t n = 0;
  std::size_t i = 0;
  double analytic = 0.0;
  std::optional<double> detected;
  bool pass(double tol) const;
};

/// c_{i,i+1} from the closed form next to the value located by lambda_sweep.
std::vector<ConsecutiveRow> consecutive_crossings(std::size_t n, double lambda_hi, std::size_t grid_points = 400);

/// Importance curves of L_n on a uniform grid of (0, lambda_hi] as CSV.
std::string importance_curves_csv(std::size_t n, double lambda_hi, std::size_t points);

}  // namespace pwp::tables
