#include <gtest/gtest.h>

#include <cmath>

#include "pwp/error.hpp"
#include "pwp/graph.hpp"
#include "pwp/spectral.hpp"
#include "pwp/sweep.hpp"
#include "test_support.hpp"

namespace pwp {
namespace {

using testing::Rng;

TEST(Spectral, SymmetricMatchesSeries) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng.index(9);
    const Matrix d = testing::random_symmetric(rng, n);
    const double lambda = rng.uniform(0.1, 5.0);
    const auto spec = real_eigendecomposition(d);
    const auto lhs = pwp_transform_spectral(spec, lambda);
    const auto rhs = pwp_transform(d, PwpParams{lambda});
    EXPECT_LT(relative_frobenius_distance(lhs.t, rhs.t), 1e-10) << trial;
  }
}

TEST(Spectral, EigenvaluesAscending) {
  const auto spec = real_eigendecomposition(Matrix(2, 2, {0, 1, 1, 0}));
  ASSERT_EQ(spec.eigenvalues.size(), 2u);
  EXPECT_NEAR(spec.eigenvalues[0], -1.0, 1e-15);
  EXPECT_NEAR(spec.eigenvalues[1], 1.0, 1e-15);
}

TEST(Spectral, NonSymmetricDiagonalizable) {
  Rng rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    // S·diag·S⁻¹ with well-separated real eigenvalues.
    Matrix s = testing::random_matrix(rng, 4, -1.0, 1.0);
    for (std::size_t i = 0; i < 4; ++i) s(i, i) += 3.0;
    Matrix diag(4, 4);
    for (std::size_t i = 0; i < 4; ++i) diag(i, i) = 0.5 * static_cast<double>(i) - 0.7;
    const Matrix d = s * diag * inverse(s);
    const auto spec = real_eigendecomposition(d);
    const auto lhs = pwp_transform_spectral(spec, 2.0);
    const auto rhs = pwp_transform(d, PwpParams{2.0});
    EXPECT_LT(relative_frobenius_distance(lhs.t, rhs.t), 1e-9);
  }
}

TEST(Spectral, RotationIsNotRealDiagonalizable) {
  try {
    real_eigendecomposition(Matrix(2, 2, {0, -1, 1, 0}));
    FAIL() << "expected NotRealDiagonalizable";
  } catch (const NotRealDiagonalizable& e) {
    EXPECT_EQ(e.kind(), "NotRealDiagonalizable");
    ASSERT_EQ(e.imaginary_parts().size(), 2u);
    EXPECT_NEAR(std::fabs(e.imaginary_parts()[0]), 1.0, 1e-12);
  }
}

TEST(Spectral, DefectiveMatrixIsIllConditioned) {
  EXPECT_THROW(real_eigendecomposition(Matrix(2, 2, {1, 1, 0, 1})), IllConditionedBasis);
  EXPECT_THROW(real_eigendecomposition(linear_graph(4)), IllConditionedBasis);
}

TEST(Spectral, AutoEngineSelection) {
  Rng rng(33);
  const auto sym = pwp_transform_auto(testing::random_symmetric(rng, 4), PwpParams{1.0});
  EXPECT_EQ(sym.engine, Engine::spectral);
  EXPECT_TRUE(sym.warning.empty());

  const auto path = pwp_transform_auto(linear_graph(3), PwpParams{1.0});
  EXPECT_EQ(path.engine, Engine::series);
  EXPECT_FALSE(path.warning.empty());
  EXPECT_NEAR(path.result.t(2, 0), 0.5 / std::expm1(1.0), 1e-15);

  const auto rot = pwp_transform_auto(Matrix(2, 2, {0, -1, 1, 0}), PwpParams{1.0});
  EXPECT_EQ(rot.engine, Engine::series);
  EXPECT_NE(rot.warning.find("oscillate"), std::string::npos);
}

TEST(ExpSum, MatchesSpectralScores) {
  Rng rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix d = testing::random_symmetric(rng, 5);
    const auto spec = real_eigendecomposition(d);
    for (ScoreKind kind : {ScoreKind::dependence, ScoreKind::influence, ScoreKind::importance}) {
      for (double lambda : {0.5, 2.0, 7.0}) {
        const auto s = indirect_scores(pwp_transform(d, PwpParams{lambda}), kind).values;
        const auto e = score_difference_expsum(spec, kind, 1, 3);
        const double expected = (s[1] - s[3]) * eplus(lambda);
        EXPECT_NEAR(e.evaluate(lambda), expected, 1e-9 * std::max(1.0, std::fabs(expected)));
      }
    }
  }
}

TEST(ExpSum, RatesStrictlyIncreasingAndNoZeroRate) {
  Rng rng(35);
  const auto spec = real_eigendecomposition(testing::random_symmetric(rng, 6));
  const auto e = score_difference_expsum(spec, ScoreKind::importance, 0, 5);
  for (std::size_t r = 0; r < e.terms.size(); ++r) {
    EXPECT_NE(e.terms[r].rate, 0.0);
    EXPECT_NE(e.terms[r].coefficient, 0.0);
    if (r > 0) {
      EXPECT_GT(e.terms[r].rate, e.terms[r - 1].rate);
    }
  }
}

TEST(ExpSum, CirculantDifferencesVanish) {
  // Undirected 5-cycle: all vertices are equivalent.
  Matrix d(5, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    d(i, (i + 1) % 5) = 1.0;
    d((i + 1) % 5, i) = 1.0;
  }
  const auto spec = real_eigendecomposition(d);
  EXPECT_TRUE(score_difference_expsum(spec, ScoreKind::importance, 0, 2).empty());
  EXPECT_THROW(isolate_roots(ExpSum{}, 0.1, 1.0, 10), Degenerate);
  EXPECT_THROW(dominance_bound(ExpSum{}), Degenerate);
}

TEST(ExpSum, DominanceBoundClosedForm) {
  // 2·e_+^λ − e_+^{2λ} = 2e^λ − e^{2λ} − 1
  const ExpSum e{{{2.0, 1.0}, {-1.0, 2.0}}};
  EXPECT_NEAR(dominance_bound(e), 0.88137358701954303, 1e-10);
  const ExpSum single{{{3.0, 1.5}}};
  EXPECT_GE(dominance_bound(single), 0.0);
}

TEST(ExpSum, IsolateRootsFindsKnownRoot) {
  // 3·e_+^λ − e_+^{2λ} = −(e^λ − 1)(e^λ − 2)
  const ExpSum e{{{3.0, 1.0}, {-1.0, 2.0}}};
  const auto r = isolate_roots(e, 0.05, 5.0, 200);
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_NEAR(r.roots[0], std::log(2.0), 1e-11);
  EXPECT_GE(r.lambda_max, r.roots[0]);
}

TEST(ExpSum, NoRootsBeyondDominanceBound) {
  Rng rng(36);
  for (int trial = 0; trial < 10; ++trial) {
    const auto spec = real_eigendecomposition(testing::random_symmetric(rng, 5));
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) {
        const auto e = score_difference_expsum(spec, ScoreKind::importance, i, j);
        if (e.empty()) continue;
        const auto iso = isolate_roots(e, 1e-3, 40.0, 4000);
        ASSERT_TRUE(std::isfinite(iso.lambda_max));
        for (double root : iso.roots) EXPECT_LE(root, iso.lambda_max + 1e-9);
      }
    }
  }
}

TEST(ExpSum, EvaluateScaledKeepsSignAtLargeLambda) {
  const ExpSum e{{{-1.0, 1.0}, {1e-3, 3.0}}};
  EXPECT_LT(e.evaluate_scaled(0.5), 0.0);
  EXPECT_GT(e.evaluate_scaled(500.0), 0.0);
  EXPECT_TRUE(std::isfinite(e.evaluate_scaled(1000.0)));
}

}  // namespace
}  // namespace pwp
