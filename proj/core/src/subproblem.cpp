#include "dcboost/errors.hpp"
#include "dcboost/inner_solver.hpp"

namespace dcboost {

ScalarOracle build_dca_subproblem(const DcProblem& problem, const Point& x_k, const Point& w_k) {
  if (x_k.size() != problem.dim || w_k.size() != problem.dim)
    throw ConfigError("build_dca_subproblem: dimension mismatch");
  return [g = problem.g, x_k, w_k](const Point& x) { return g(x) - w_k.dot(x - x_k); };
}

ScalarOracle build_ppmdc_subproblem(const DcProblem& problem, const Point& x_k, const Point& w_k,
                                    double alpha) {
  if (!(alpha > 0.0)) throw ConfigError("build_ppmdc_subproblem: alpha must be > 0");
  if (x_k.size() != problem.dim || w_k.size() != problem.dim)
    throw ConfigError("build_ppmdc_subproblem: dimension mismatch");
  return [g = problem.g, x_k, w_k, half = 0.5 * alpha](const Point& x) {
    const Point step = x - x_k;
    return g(x) - w_k.dot(step) + half * step.squaredNorm();
  };
}

}  // namespace dcboost
