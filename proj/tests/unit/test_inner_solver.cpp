#include <gtest/gtest.h>

#include <cmath>

#include "dcboost/errors.hpp"
#include "dcboost/inner_solver.hpp"
#include "dcboost/problems.hpp"
#include "test_util.hpp"

namespace dcboost {
namespace {

using testing::pt;

// Smallest value of f on a uniform grid around `center`; the oracle for
// "the simplex result is the minimizer" on nonsmooth objectives.
double grid_min(const ScalarOracle& f, const Point& center, double half_width, int steps) {
  double best = f(center);
  Point x = center;
  for (int i = -steps; i <= steps; ++i) {
    for (int j = -steps; j <= steps; ++j) {
      x(0) = center(0) + half_width * i / steps;
      x(1) = center(1) + half_width * j / steps;
      best = std::min(best, f(x));
    }
  }
  return best;
}

DcProblem one_dim_quadratic() {
  DcProblem p;
  p.name = "1d";
  p.dim = 1;
  p.sigma = 0.25;
  p.g = [](const Point& x) { return x(0) * x(0); };
  p.g_grad = [](const Point& x) -> Point { return 2.0 * x; };
  p.h = [](const Point& x) { return 0.5 * x(0) * x(0); };
  p.h_subgrad = [](const Point& x) -> Point { return x; };
  p.init_box = Box::uniform(1, -10.0, 10.0);
  return p;
}

TEST(NelderMead, ShiftedQuadratic) {
  const ScalarOracle f = [](const Point& x) { return (x - pt({3.0, 4.0})).squaredNorm(); };
  const InnerResult r = nelder_mead(f, pt({0.0, 0.0}));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x(0), 3.0, 1e-6);
  EXPECT_NEAR(r.x(1), 4.0, 1e-6);
}

TEST(NelderMead, NonsmoothWeightedL1) {
  const ScalarOracle f = [](const Point& x) { return std::abs(x(0)) + 2.0 * std::abs(x(1)); };
  const InnerResult r = nelder_mead(f, pt({4.0, 4.0}));
  EXPECT_NEAR(r.x.norm(), 0.0, 1e-5);
  EXPECT_LE(r.value, grid_min(f, r.x, 1e-3, 20) + 1e-12);
}

TEST(NelderMead, NeverIncreasesObjective) {
  std::mt19937_64 gen(3);
  const Box box = Box::uniform(3, -5.0, 5.0);
  for (int t = 0; t < 25; ++t) {
    const Point c = testing::random_in(box, gen);
    const ScalarOracle f = [c](const Point& x) { return (x - c).cwiseAbs().sum() + 0.1 * x.squaredNorm(); };
    const Point x0 = testing::random_in(box, gen);
    EXPECT_LE(nelder_mead(f, x0).value, f(x0));
  }
}

TEST(NelderMead, FixedPointStability) {
  const auto& p = find_card("p6_2").problem;
  const ScalarOracle psi = build_dca_subproblem(p, pt({-3.0, 2.0}), subgrad_h(p, pt({-3.0, 2.0})));
  InnerConfig cfg;
  const InnerResult first = nelder_mead(psi, pt({-3.0, 2.0}), cfg);
  const InnerResult again = nelder_mead(psi, first.x, cfg);
  EXPECT_LE((again.x - first.x).norm(), 10.0 * cfg.tol_x);
}

TEST(NelderMead, IterationCapFlagsNotConverged) {
  const ScalarOracle f = [](const Point& x) { return (x - pt({30.0, -40.0})).squaredNorm(); };
  InnerConfig cfg;
  cfg.max_inner_iters = 5;
  const InnerResult r = nelder_mead(f, pt({0.0, 0.0}), cfg);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 5);
  EXPECT_LE(r.value, f(pt({0.0, 0.0})));
}

TEST(NelderMead, ConfigValidation) {
  InnerConfig cfg;
  cfg.tol_x = 0.0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  EXPECT_EQ(InnerConfig{}.iteration_cap(3), 1200);
}

TEST(DcaSubproblem, FirstStepOfTheWorkedExample) {
  const auto& p = find_card("p6_2").problem;
  const Point x0 = pt({0.5, 1.0});
  const ScalarOracle psi = build_dca_subproblem(p, x0, subgrad_h(p, x0));
  const InnerResult r = nelder_mead(psi, x0);
  EXPECT_NEAR((r.x - pt({1.0, 0.0})).norm(), 0.0, 1e-5);
}

TEST(DcaSubproblem, QuadraticGMinimizerIsHalfW) {
  DcProblem p = one_dim_quadratic();
  const Point w = pt({1.7});
  const InnerResult r = nelder_mead(build_dca_subproblem(p, pt({-2.0}), w), pt({-2.0}));
  EXPECT_NEAR(r.x(0), w(0) / 2.0, 1e-6);
}

TEST(DcaSubproblem, CriticalPointIsItsOwnMinimizer) {
  const auto& p = find_card("p6_2").problem;
  const Point xs = pt({1.5, 0.0});
  const ScalarOracle psi = build_dca_subproblem(p, xs, subgrad_h(p, xs));
  EXPECT_GE(grid_min(psi, xs, 0.1, 40), psi(xs) - 1e-12);
  const InnerResult r = nelder_mead(psi, xs);
  EXPECT_NEAR((r.x - xs).norm(), 0.0, 1e-6);
}

TEST(PpmdcSubproblem, OneDimensionalClosedForm) {
  // Stationarity of x^2 - (x - 1) + (a/2)(x - 1)^2: 2x - 1 + a(x - 1) = 0.
  const double alpha = 0.01;
  const double expected = (1.0 + alpha) / (2.0 + alpha);
  const DcProblem p = one_dim_quadratic();
  const InnerResult r = nelder_mead(build_ppmdc_subproblem(p, pt({1.0}), pt({1.0}), alpha), pt({1.0}));
  EXPECT_NEAR(r.x(0), expected, 1e-6);
  EXPECT_NEAR(expected, 0.502488, 1e-6);
}

TEST(PpmdcSubproblem, VanishingAlphaMatchesDca) {
  const auto& p = find_card("p6_2").problem;
  const Point x0 = pt({0.5, 1.0});
  const Point w = subgrad_h(p, x0);
  const InnerResult prox = nelder_mead(build_ppmdc_subproblem(p, x0, w, 1e-10), x0);
  const InnerResult plain = nelder_mead(build_dca_subproblem(p, x0, w), x0);
  EXPECT_NEAR((prox.x - plain.x).norm(), 0.0, 1e-5);
}

TEST(PpmdcSubproblem, FixedPointAtCriticalPoint) {
  const auto& p = find_card("p6_2").problem;
  const Point xs = pt({1.5, 0.0});
  const InnerResult r = nelder_mead(build_ppmdc_subproblem(p, xs, subgrad_h(p, xs), 0.01), xs);
  EXPECT_NEAR((r.x - xs).norm(), 0.0, 1e-6);
}

TEST(PpmdcSubproblem, RejectsBadAlpha) {
  const auto& p = find_card("p6_2").problem;
  EXPECT_THROW(build_ppmdc_subproblem(p, pt({0.0, 0.0}), pt({0.0, 0.0}), 0.0), ConfigError);
  EXPECT_THROW(build_dca_subproblem(p, pt({0.0}), pt({0.0, 0.0})), ConfigError);
}

}  // namespace
}  // namespace dcboost
