#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pwp/matrix.hpp"
#include "pwp/transform.hpp"

namespace pwp {

enum class ScoreKind { dependence, influence, importance };

std::string_view to_string(ScoreKind kind);
/// Accepts "dependence", "influence", "importance".
std::optional<ScoreKind> parse_score_kind(std::string_view name);

struct ScoreVector {
  ScoreKind kind = ScoreKind::importance;
  std::vector<double> values;
  /// Empty for scores of the direct-influence matrix, otherwise the λ of T.
  std::optional<double> lambda;

  std::size_t size() const noexcept { return values.size(); }
};

/// Dependence = row sums, influence = column sums, importance = both.
/// Every sum is taken in canonical order, so vertices whose row/column
/// entries form the same multiset get bit-identical scores.
ScoreVector direct_scores(const Matrix& d, ScoreKind kind);
ScoreVector indirect_scores(const InfluenceMatrix& t, ScoreKind kind);

inline constexpr double kDefaultTieTol = 1e-9;

/// Ordered partition of the vertices, highest score first. Members of a group
/// are listed in ascending index order.
struct Ranking {
  std::vector<std::vector<std::size_t>> groups;
  double tie_tol = 0.0;

  std::size_t vertex_count() const noexcept;
  /// Group position of each vertex (0 = top).
  std::vector<std::size_t> positions() const;
  /// "3,4 > 2,5 > 1,6" using 1-based indices, or the given labels.
  std::string to_string() const;
  std::string to_string(const std::vector<std::string>& labels) const;
};

/// Sorts by score descending and chains consecutive gaps no larger than
/// tie_tol·max|score| into tie groups.
Ranking ranking_from_scores(const ScoreVector& s, double tie_tol = kDefaultTieTol);
Ranking ranking_from_scores(const std::vector<double>& values, double tie_tol = kDefaultTieTol);

/// Same ordered partition (the tolerances are not compared).
bool ranking_equal(const Ranking& a, const Ranking& b);

/// Parses "3,4 > 2,5 > 1,6" (1-based indices). Whitespace is ignored.
Ranking parse_ranking(std::string_view text);

/// +1 when a is ranked above b, −1 when below, 0 when tied.
int relation(const std::vector<std::size_t>& positions, std::size_t a, std::size_t b);

/// True when every strict order of `coarse` holds in `fine` as well.
bool ranking_refines(const Ranking& fine, const Ranking& coarse);

}  // namespace pwp
