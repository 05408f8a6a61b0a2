#pragma once

#include <functional>

#include "dcboost/dc_problem.hpp"
#include "dcboost/inner_solver.hpp"
#include "dcboost/nu_strategy.hpp"
#include "dcboost/trace.hpp"

namespace dcboost {

/// Where each backtracking search starts.
///  - kReset: every search starts from lambda_{-1}.
///  - kCarry: every search starts from the previously accepted lambda_{k-1},
///    so accepted steps are non-increasing over the run.
enum class TrialStep { kReset, kCarry };

struct SolverConfig {
  double lambda_init = 1.0;  ///< lambda_{-1}
  double rho = 0.5;
  double zeta = 0.5;
  double stop_tol = 1e-7;   ///< on |x^{k+1} - x^k|
  double crit_tol = 1e-9;   ///< |d^k| at or below this is treated as d^k = 0
  int max_outer_iters = 5000;
  int max_backtracks = 60;
  TrialStep trial_step = TrialStep::kReset;
  NuStrategy nu = nu::PowerDecay{0.01};
  InnerConfig inner;
  double ppmdc_alpha = 0.01;

  void validate() const;
};

struct LineSearchResult {
  double lambda = 0.0;
  int j = 0;
  int evals = 0;  ///< phi evaluations including phi(y)
  bool fallback = false;
  double phi_value = 0.0;  ///< phi at y + lambda d (phi(y) on fallback)
};

/// Smallest j <= max_backtracks with
///   phi(y + zeta^j lambda_prev d) <= phi(y) - rho (zeta^j lambda_prev)^2 |d|^2 + nu,
/// returning lambda = zeta^j lambda_prev. If none qualifies the result is the
/// fallback lambda = 0, j = max_backtracks + 1.
LineSearchResult line_search(const ScalarOracle& phi, const Point& y, const Point& d, double lambda_prev,
                             double rho, double zeta, double nu, int max_backtracks);

/// Same rule with a precomputed phi(y); `evals` then still counts phi(y).
LineSearchResult line_search(const ScalarOracle& phi, const Point& y, double phi_y, const Point& d,
                             double lambda_prev, double rho, double zeta, double nu, int max_backtracks);

Trace dca(const DcProblem& problem, const Point& x0, const SolverConfig& config);

/// Non-monotone boosted DCA. Throws ConfigError when g is nonsmooth and the
/// configured growth rule does not guarantee nu_k > 0.
Trace nmbdca(const DcProblem& problem, const Point& x0, const SolverConfig& config);

/// Monotone boosted DCA: nmbdca with nu_k = 0. Requires a smooth g.
Trace bdca_monotone(const DcProblem& problem, const Point& x0, const SolverConfig& config);

/// Proximal point method for DC functions with constant alpha.
Trace ppmdc(const DcProblem& problem, const Point& x0, const SolverConfig& config, double alpha);

/// Growth budget for the subgradient method as a function of (k, |s^k|^2).
using SubgradNu = std::function<double(int, double)>;

/// nu_k = omega |s^k|^2 / (k+1)^2.
SubgradNu subgrad_nu_inverse_square(double omega = 0.01);

/// Subgradient method with the non-monotone linear-decrease search
///   f(x - t s) <= f(x) - rho t |s|^2 + nu_k,  t = zeta^j lambda_{k-1}.
/// Stops on |s^k| <= crit_tol, on |x^{k+1} - x^k| < stop_tol, or at the cap.
/// Uses lambda_init, rho, zeta, stop_tol, crit_tol, max_outer_iters,
/// max_backtracks and trial_step from `config`.
Trace nm_subgradient(const ScalarOracle& f, const VectorOracle& subgrad_f, const Point& x0,
                     const SolverConfig& config, const SubgradNu& nu);

}  // namespace dcboost
