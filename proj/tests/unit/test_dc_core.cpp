#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "dcboost/dc_problem.hpp"
#include "dcboost/errors.hpp"
#include "dcboost/finite_diff.hpp"
#include "dcboost/problems.hpp"
#include "test_util.hpp"

namespace dcboost {
namespace {

using testing::pt;

TEST(EvalPhi, KnownValues) {
  EXPECT_DOUBLE_EQ(eval_phi(find_card("p6_2").problem, pt({1.5, 0.0})), -1.125);
  EXPECT_DOUBLE_EQ(eval_phi(find_card("p6_2").problem, pt({0.0, 0.0})), 0.0);
  EXPECT_NEAR(eval_phi(find_card("p6_7").problem, pt({0.75, 1.25, 0.25})), 3.5, 1e-12);
}

TEST(EvalPhi, CountsEachComponent) {
  EvalCounter c;
  const auto& p = find_card("p6_2").problem;
  eval_phi(p, pt({1.0, 2.0}), c);
  eval_phi(p, pt({1.0, 2.0}), c);
  subgrad_h(p, pt({1.0, 2.0}), c);
  EXPECT_EQ(c.phi_evals, 2);
  EXPECT_EQ(c.g_evals, 2);
  EXPECT_EQ(c.h_evals, 2);
  EXPECT_EQ(c.subgrad_evals, 1);
}

TEST(EvalPhi, NonFiniteOracleNamesComponent) {
  DcProblem p = find_card("p6_2").problem;
  p.h = [](const Point&) { return std::numeric_limits<double>::quiet_NaN(); };
  try {
    eval_phi(p, pt({0.0, 0.0}));
    FAIL() << "expected EvalError";
  } catch (const EvalError& e) {
    EXPECT_NE(std::string(e.what()).find("oracle h"), std::string::npos) << e.what();
  }
}

TEST(EvalPhi, DimensionMismatchIsConfigError) {
  EXPECT_THROW(eval_phi(find_card("p6_2").problem, pt({1.0, 2.0, 3.0})), ConfigError);
}

TEST(SubgradH, Selections) {
  const auto& p62 = find_card("p6_2").problem;
  EXPECT_TRUE(subgrad_h(p62, pt({0.5, 1.0})).isApprox(pt({0.5, 1.0})));
  EXPECT_TRUE(subgrad_h(p62, pt({0.0, 0.0})).isZero());

  const auto& p64 = find_card("p6_4").problem;
  const Point w = subgrad_h(p64, pt({1.0, 1.0}));
  EXPECT_EQ(w, pt({100.0, -100.0}));
  const Point fd = fd_central_gradient(p64.h, pt({1.0, 1.0}));
  EXPECT_NEAR((w - fd).norm(), 0.0, 1e-5);
}

TEST(SubgradH, KinkUsesSignZero) {
  // h = 100(|x1| - x2) at x1 = 0 selects the zero element of [-100, 100].
  EXPECT_EQ(subgrad_h(find_card("p6_4").problem, pt({0.0, 3.0})), pt({0.0, -100.0}));
}

TEST(StrongConvexify, PreservesPhiPointwise) {
  std::mt19937_64 gen(7);
  for (const auto& card : catalog()) {
    const DcProblem aug = strong_convexify(card.problem, 3.0);
    EXPECT_DOUBLE_EQ(aug.sigma, card.problem.sigma + 3.0);
    for (int i = 0; i < 50; ++i) {
      const Point x = testing::random_in(card.problem.init_box, gen);
      const double a = eval_phi(card.problem, x);
      EXPECT_NEAR(eval_phi(aug, x), a, 1e-12 * std::max(1.0, std::abs(a))) << card.id;
    }
  }
}

TEST(StrongConvexify, RecoversPrintedSineDecomposition) {
  // sin(sqrt|u|) alone, then + (10/2)|x|^2 on both sides.
  const DcProblem& printed = find_card("p6_1").problem;
  DcProblem bare = printed;
  bare.g = [&printed](const Point& x) { return printed.g(x) - 5.0 * x.squaredNorm(); };
  bare.h = [](const Point&) { return 0.0; };
  bare.h_subgrad = [](const Point& x) -> Point { return Point::Zero(x.size()); };
  bare.sigma = 0.0;
  const DcProblem aug = strong_convexify(bare, 10.0);
  std::mt19937_64 gen(11);
  for (int i = 0; i < 50; ++i) {
    const Point x = testing::random_in(printed.init_box, gen);
    EXPECT_NEAR(aug.g(x), printed.g(x), 1e-12 * std::max(1.0, std::abs(printed.g(x))));
    EXPECT_NEAR(aug.h(x), printed.h(x), 1e-12 * std::max(1.0, std::abs(printed.h(x))));
  }
}

TEST(StrongConvexify, AddsModulusToConvexComponent) {
  const double s = 4.0;
  const DcProblem aug = strong_convexify(find_card("p6_4").problem, s);
  std::mt19937_64 gen(5);
  for (int i = 0; i < 100; ++i) {
    const Point x = testing::random_in(aug.init_box, gen);
    const Point y = testing::random_in(aug.init_box, gen);
    const double rhs = aug.g(x) + (*aug.g_subgrad)(x).dot(y - x) + 0.5 * s * (y - x).squaredNorm();
    EXPECT_GE(aug.g(y), rhs - 1e-9);
  }
}

TEST(StrongConvexify, RejectsNonPositiveShift) {
  EXPECT_THROW(strong_convexify(find_card("p6_2").problem, 0.0), ConfigError);
}

TEST(FiniteDiff, DirectionalDerivatives) {
  const auto& p62 = find_card("p6_2").problem;
  const ScalarOracle phi = [&p62](const Point& x) { return eval_phi(p62, x); };
  EXPECT_NEAR(fd_directional_derivative(phi, pt({1.0, 0.0}), pt({0.5, -1.0}), 1e-6), 0.75, 1e-5);

  const ScalarOracle sq = [](const Point& x) { return x.squaredNorm(); };
  EXPECT_NEAR(fd_directional_derivative(sq, pt({0.0, 0.0}), pt({0.3, -2.0}), 1e-6), 0.0, 1e-5);

  const auto& f7 = find_card("sec7_subgrad").problem;
  const ScalarOracle f = [&f7](const Point& x) { return eval_phi(f7, x); };
  EXPECT_NEAR(fd_directional_derivative(f, pt({1.0, 0.0}), -pt({1.5, -2.0}), 1e-6), 1.75, 1e-4);
}

TEST(FiniteDiff, Errors) {
  const ScalarOracle sq = [](const Point& x) { return x.squaredNorm(); };
  EXPECT_THROW(fd_directional_derivative(sq, pt({1.0}), pt({1.0}), 0.0), ConfigError);
  EXPECT_THROW(fd_directional_derivative(sq, pt({1.0}), pt({0.0}), 1e-6), ConfigError);
  const ScalarOracle bad = [](const Point&) { return std::numeric_limits<double>::infinity(); };
  EXPECT_THROW(fd_directional_derivative(bad, pt({1.0}), pt({1.0}), 1e-6), EvalError);
}

TEST(FiniteDiff, SmoothnessProbe) {
  const ScalarOracle abs1 = [](const Point& x) { return std::abs(x(0)); };
  EXPECT_FALSE(fd_looks_smooth(abs1, pt({0.0}), 1e-4));
  EXPECT_TRUE(fd_looks_smooth(abs1, pt({0.5}), 1e-4));
}

TEST(DcProblem, ValidateCatchesStructuralErrors) {
  DcProblem p = find_card("p6_2").problem;
  p.sigma = -1.0;
  EXPECT_THROW(p.validate(), ConfigError);
  p = find_card("p6_2").problem;
  p.h_subgrad = nullptr;
  EXPECT_THROW(p.validate(), ConfigError);
}

}  // namespace
}  // namespace dcboost
