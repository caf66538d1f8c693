#include <gtest/gtest.h>

#include <cmath>

#include "pwp/error.hpp"
#include "pwp/graph.hpp"
#include "pwp/rankings.hpp"
#include "pwp/transform.hpp"
#include "test_support.hpp"

namespace pwp {
namespace {

TEST(Scores, DirectScoresOfL6) {
  const Matrix d = linear_graph(6);
  EXPECT_EQ(direct_scores(d, ScoreKind::dependence).values, (std::vector<double>{0, 1, 1, 1, 1, 1}));
  EXPECT_EQ(direct_scores(d, ScoreKind::influence).values, (std::vector<double>{1, 1, 1, 1, 1, 0}));
  EXPECT_EQ(direct_scores(d, ScoreKind::importance).values, (std::vector<double>{1, 2, 2, 2, 2, 1}));
  EXPECT_EQ(ranking_from_scores(direct_scores(d, ScoreKind::importance)).to_string(), "2,3,4,5 > 1,6");
}

TEST(Scores, IndirectScoresCarryLambda) {
  const auto t = pwp_transform(linear_graph(3), PwpParams{2.0});
  const auto s = indirect_scores(t, ScoreKind::importance);
  ASSERT_TRUE(s.lambda.has_value());
  EXPECT_EQ(*s.lambda, 2.0);
  EXPECT_FALSE(direct_scores(linear_graph(3), ScoreKind::importance).lambda.has_value());
}

TEST(Scores, L3TiesExactlyAtTwo) {
  const auto s = indirect_scores(pwp_transform(linear_graph(3), PwpParams{2.0}), ScoreKind::importance);
  const double expected = 4.0 / std::expm1(2.0);
  for (double v : s.values) EXPECT_NEAR(v, expected, 1e-15);
  EXPECT_EQ(ranking_from_scores(s, 0.0).groups.size(), 1u);
}

TEST(Scores, MirrorVerticesTieExactly) {
  for (std::size_t n : {4u, 6u, 9u}) {
    for (double lambda : {0.7, 3.3, 15.0}) {
      const auto s = indirect_scores(pwp_transform(linear_graph(n), PwpParams{lambda}), ScoreKind::importance);
      for (std::size_t i = 0; i < n / 2; ++i) EXPECT_EQ(s.values[i], s.values[n - 1 - i]);
    }
  }
}

TEST(Scores, ImportanceIsDependencePlusInfluence) {
  testing::Rng rng(8);
  const auto t = pwp_transform(testing::random_matrix(rng, 5), PwpParams{1.3});
  const auto e = indirect_scores(t, ScoreKind::dependence).values;
  const auto f = indirect_scores(t, ScoreKind::influence).values;
  const auto g = indirect_scores(t, ScoreKind::importance).values;
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(g[i], e[i] + f[i], 1e-14);
}

TEST(Ranking, TiesAndOrder) {
  const auto r = ranking_from_scores(std::vector<double>{1.0, 3.0, 3.0, 2.0}, 0.0);
  EXPECT_EQ(r.to_string(), "2,3 > 4 > 1");
  EXPECT_EQ(r.positions(), (std::vector<std::size_t>{2, 0, 0, 1}));
  EXPECT_EQ(r.to_string({"a", "b", "c", "d"}), "b,c > d > a");
}

TEST(Ranking, ToleranceIsRelative) {
  const std::vector<double> tiny = {3e-12, 2.9e-12, 1e-12};
  EXPECT_EQ(ranking_from_scores(tiny).to_string(), "1 > 2 > 3");
  const std::vector<double> close = {1.0, 1.0 - 1e-10, 0.5};
  EXPECT_EQ(ranking_from_scores(close).to_string(), "1,2 > 3");
  EXPECT_EQ(ranking_from_scores(close, 0.0).to_string(), "1 > 2 > 3");
  EXPECT_THROW(ranking_from_scores(close, -1.0), InvalidArgument);
}

TEST(Ranking, ParseRoundTrip) {
  const auto r = parse_ranking("3,4 > 2,5 > 1,6");
  EXPECT_EQ(r.to_string(), "3,4 > 2,5 > 1,6");
  EXPECT_TRUE(ranking_equal(r, parse_ranking(" 4,3>5,2 >6,1 ")));
  EXPECT_THROW(parse_ranking("1 > > 2"), ParseError);
  EXPECT_THROW(parse_ranking("0 > 1"), ParseError);
}

TEST(Ranking, Refinement) {
  const auto coarse = parse_ranking("2,3 > 1,4");
  EXPECT_TRUE(ranking_refines(parse_ranking("3 > 2 > 4 > 1"), coarse));
  EXPECT_TRUE(ranking_refines(coarse, coarse));
  EXPECT_FALSE(ranking_refines(parse_ranking("2 > 1 > 3 > 4"), coarse));
  EXPECT_FALSE(ranking_refines(coarse, parse_ranking("3 > 2 > 4 > 1")));
}

TEST(Ranking, RelationSigns) {
  const auto pos = parse_ranking("2 > 1,3").positions();
  EXPECT_EQ(relation(pos, 1, 0), 1);
  EXPECT_EQ(relation(pos, 0, 1), -1);
  EXPECT_EQ(relation(pos, 0, 2), 0);
}

TEST(Ranking, PermutationEquivariance) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix d = testing::random_matrix(rng, 6);
    const auto perm = testing::random_permutation(rng, 6);
    const PwpParams p{2.0};
    const auto r = ranking_from_scores(indirect_scores(pwp_transform(d, p), ScoreKind::importance), 0.0);
    const auto rp = ranking_from_scores(indirect_scores(pwp_transform(permute(d, perm), p), ScoreKind::importance), 0.0);
    ASSERT_EQ(r.groups.size(), rp.groups.size());
    for (std::size_t g = 0; g < r.groups.size(); ++g) {
      std::vector<std::size_t> mapped;
      for (auto v : r.groups[g]) mapped.push_back(perm[v]);
      std::sort(mapped.begin(), mapped.end());
      EXPECT_EQ(mapped, rp.groups[g]);
    }
  }
}

TEST(Ranking, ScoreKindNames) {
  EXPECT_EQ(parse_score_kind("influence"), ScoreKind::influence);
  EXPECT_FALSE(parse_score_kind("degree").has_value());
  EXPECT_EQ(to_string(ScoreKind::dependence), "dependence");
}

}  // namespace
}  // namespace pwp
