#include <gtest/gtest.h>

#include <cmath>

#include "pwp/analytic.hpp"
#include "pwp/error.hpp"
#include "pwp/graph.hpp"
#include "pwp/rankings.hpp"
#include "pwp/sweep.hpp"
#include "pwp/transform.hpp"

namespace pwp {
namespace {

using namespace pwp::analytic;

TEST(Analytic, FrozenImportanceValue) {
  // 65/24 / (e − 1)
  EXPECT_NEAR(linear_importance(6, 2, 1.0), 1.5761869144377590, 1e-15);
  EXPECT_NEAR(linear_importance(2, 1, 1.5), 1.5 / std::expm1(1.5), 1e-15);
}

TEST(Analytic, L3Difference) {
  EXPECT_NEAR(linear_importance_difference(3, 1, 2, 2.0), 0.0, 1e-16);
  EXPECT_LT(linear_importance_difference(3, 1, 2, 1.0), 0.0);
  EXPECT_GT(linear_importance_difference(3, 1, 2, 3.0), 0.0);
}

TEST(Analytic, MatchesSeriesScores) {
  for (std::size_t n : {2u, 3u, 6u, 11u}) {
    for (double lambda : {0.4, 1.0, 5.0, 25.0}) {
      const auto t = pwp_transform(linear_graph(n), PwpParams{lambda});
      const auto g = indirect_scores(t, ScoreKind::importance).values;
      const auto f = indirect_scores(t, ScoreKind::influence).values;
      for (std::size_t j = 1; j <= n; ++j) {
        EXPECT_NEAR(linear_importance(n, j, lambda), g[j - 1], 1e-14 * std::max(1.0, g[j - 1]));
        EXPECT_NEAR(linear_influence(n, j, lambda), f[j - 1], 1e-14 * std::max(1.0, f[j - 1]));
      }
    }
  }
}

TEST(Analytic, MirrorSymmetryIsBitExact) {
  for (std::size_t n = 2; n <= 15; ++n)
    for (double lambda : {0.3, 2.2, 9.0})
      for (std::size_t j = 1; j <= n; ++j)
        EXPECT_EQ(linear_importance(n, j, lambda), linear_importance(n, n + 1 - j, lambda));
}

TEST(Analytic, ClosedFormSpotValues) {
  EXPECT_NEAR(crossing_consecutive(4, 1).lambda_star, std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(crossing_consecutive(5, 2).lambda_star, 3.0, 1e-12);
  EXPECT_NEAR(crossing_consecutive(6, 1).lambda_star, 3.3097509196468731, 1e-12);
  EXPECT_NEAR(crossing_consecutive(6, 2).lambda_star, 3.4641016151377546, 1e-12);
  EXPECT_NEAR(crossing_consecutive(3, 1).lambda_star, 2.0, 1e-12);
  const auto c = crossing_consecutive(6, 2);
  EXPECT_EQ(c.i, 2u);
  EXPECT_EQ(c.j, 3u);
  EXPECT_EQ(c.method, CrossingMethod::analytic);
}

TEST(Analytic, CrossingIndexRange) {
  EXPECT_THROW(crossing_consecutive(6, 3), IndexError);
  EXPECT_THROW(crossing_consecutive(6, 0), IndexError);
  EXPECT_THROW(crossing_consecutive(2, 1), IndexError);
  EXPECT_THROW(linear_importance(4, 5, 1.0), IndexError);
  EXPECT_THROW(linear_importance(4, 1, 0.0), InvalidArgument);
}

TEST(Analytic, CrossingIsARootOfTheDifference) {
  for (std::size_t n = 3; n <= 20; ++n) {
    for (std::size_t i = 1; i + 1 <= half_size(n); ++i) {
      const double c = crossing_consecutive(n, i).lambda_star;
      const auto f = [&](double l) { return linear_importance_difference(n, i, i + 1, l); };
      EXPECT_LT(f(c * (1 - 1e-6)), 0.0) << n << "," << i;
      EXPECT_GT(f(c * (1 + 1e-6)), 0.0) << n << "," << i;
    }
  }
}

TEST(Analytic, NonConsecutiveCrossingOnL6) {
  const auto f = [](double l) { return linear_importance_difference(6, 1, 3, l); };
  const auto root = find_crossing(f, 3.0, 4.0, 1e-13);
  EXPECT_NEAR(root.x, 3.3770268700904674, 1e-11);
}

TEST(Analytic, CrossingOrderUpToSixty) {
  for (std::size_t n = 4; n <= 60; ++n) {
    const std::size_t k = half_size(n);
    for (std::size_t i = 1; i + 2 <= k; ++i)
      EXPECT_LT(crossing_consecutive(n, i).lambda_star, crossing_consecutive(n, i + 1).lambda_star) << n;
  }
}

TEST(Analytic, SmallAndLargeLambdaOrder) {
  // Below c_{1,2} the order on the first half is 1 < 2 < ... < k, above
  // c_{k-1,k} it is reversed.
  for (std::size_t n : {5u, 6u, 9u, 12u}) {
    const std::size_t k = half_size(n);
    const double low = crossing_consecutive(n, 1).lambda_star * 0.5;
    const double high = crossing_consecutive(n, k - 1).lambda_star * 3.0;
    for (std::size_t i = 1; i < k; ++i) {
      EXPECT_LT(linear_importance_difference(n, i, i + 1, low), 0.0);
      EXPECT_GT(linear_importance_difference(n, i, i + 1, high), 0.0);
    }
  }
}

TEST(Analytic, InfluenceDecreasesAlongThePath) {
  for (std::size_t n : {3u, 7u, 11u})
    for (double lambda : {0.1, 1.0, 10.0, 30.0})
      for (std::size_t i = 1; i < n; ++i)
        EXPECT_GT(linear_influence(n, i, lambda), linear_influence(n, i + 1, lambda));
}

TEST(Analytic, ImportanceDecaysToZero) {
  for (std::size_t j = 1; j <= 6; ++j) {
    EXPECT_GT(linear_importance(6, j, 5.0), linear_importance(6, j, 50.0));
    EXPECT_LT(linear_importance(6, j, 200.0), 1e-70);
  }
}

TEST(Circuit, FrozenValue) {
  EXPECT_NEAR(circuit_indirect(3, 1, 1.0), 0.60634136836170494, 1e-15);
}

TEST(Circuit, MatchesSeries) {
  for (std::size_t n : {3u, 6u}) {
    for (double lambda : {0.5, 2.0, 5.0}) {
      const auto t = pwp_transform(circuit_graph(n), PwpParams{lambda}).t;
      for (std::size_t k = 1; k <= n; ++k) {
        // offset k: entry (k mod n, 0)
        EXPECT_NEAR(circuit_indirect(n, k, lambda), t(k % n, 0), 1e-11);
      }
    }
  }
}

TEST(Circuit, OffsetsDecreaseForModerateLambda) {
  for (std::size_t n = 3; n <= 10; ++n)
    for (double lambda : {0.5, 1.0, 1.9})
      for (std::size_t k = 1; k < n; ++k) EXPECT_GT(circuit_indirect(n, k, lambda), circuit_indirect(n, k + 1, lambda));
}

TEST(Circuit, ScoresAreUniformAndStochastic) {
  const auto s = circuit_scores(5, 2.0);
  for (double v : s.influence.values) EXPECT_NEAR(v, 1.0, 1e-14);
  for (double v : s.importance.values) EXPECT_NEAR(v, 2.0, 1e-14);
}

}  // namespace
}  // namespace pwp
