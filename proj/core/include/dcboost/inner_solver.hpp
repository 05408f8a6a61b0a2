#pragma once

#include <cstdint>

#include "dcboost/dc_problem.hpp"

namespace dcboost {

struct InnerConfig {
  double tol_x = 1e-7;  ///< max-norm spread of the simplex around its best vertex
  double tol_f = 1e-7;  ///< spread of objective values across the simplex
  int max_inner_iters = 0;  ///< 0 selects 400 * dim

  int iteration_cap(int dim) const { return max_inner_iters > 0 ? max_inner_iters : 400 * dim; }
  void validate() const;
};

struct InnerResult {
  Point x;
  double value = 0.0;
  int iterations = 0;
  std::int64_t evaluations = 0;
  bool converged = false;  ///< false: hit the iteration cap, `x` is the best vertex seen
};

/// Derivative-free simplex minimizer (reflection 1, expansion 2, contraction
/// 0.5, shrink 0.5). The initial simplex perturbs each coordinate of x_init by
/// 5% of its magnitude, or by 0.00025 when it is zero. Stops once every vertex
/// lies within tol_x (max-norm) of the best one and the objective spread is at
/// most tol_f. x_init is a vertex of the starting simplex, so the returned
/// value never exceeds f(x_init).
InnerResult nelder_mead(const ScalarOracle& f, const Point& x_init, const InnerConfig& config = {});

/// psi(x) = g(x) - <w_k, x - x_k>; its minimizer is the DCA point y^k.
ScalarOracle build_dca_subproblem(const DcProblem& problem, const Point& x_k, const Point& w_k);

/// psi(x) + (alpha/2)|x - x_k|^2, the proximal DC subproblem.
ScalarOracle build_ppmdc_subproblem(const DcProblem& problem, const Point& x_k, const Point& w_k,
                                    double alpha);

}  // namespace dcboost
