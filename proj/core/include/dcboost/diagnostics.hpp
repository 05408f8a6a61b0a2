#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcboost/dc_problem.hpp"
#include "dcboost/trace.hpp"

namespace dcboost {

struct StepBound {
  double delta_hat = 0.0;
  double delta_k = 0.0;  ///< min{delta_hat, 1, 3 sigma / (2 rho)}
};

/// Steps lambda in (0, delta_k] are guaranteed to pass the non-monotone
/// search at (y_k, d_k = y_k - x_k). Throws InvariantViolation when
/// g(y + d) + g(x) - 2 g(y) < sigma |d|^2 - 1e-9, i.e. the declared sigma is
/// wrong for g.
StepBound diagnostics_step_bound(const DcProblem& problem, const Point& x_k, const Point& y_k, double nu_k,
                                 double rho);

/// min{lambda_init, 2 zeta sigma / (L + 2 rho)}
double lambda_min(double lambda_init, double zeta, double sigma, double lipschitz_L, double rho);

struct EvalBound {
  int k = 0;
  std::int64_t J = 0;  ///< sum over l <= k of (j_l + 2)
  double bound = 0.0;  ///< 2(k + 1) + (log lambda_min - log lambda_init) / log zeta
};

/// One entry per line-search iteration of the trace (records without a
/// boosted step, such as a final critical-point record, are skipped).
std::vector<EvalBound> diagnostics_eval_bound_path(const Trace& trace, double lambda_min, double zeta,
                                                   double lambda_init);

/// Last entry of the path; {0, 0, 0} for a trace without line searches.
EvalBound diagnostics_eval_bound(const Trace& trace, double lambda_min, double zeta, double lambda_init);

struct DescentViolation {
  int k = 0;
  std::string rule;  ///< "dca" or "boosted"
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Replays the recorded values against
///   phi(y^k) <= phi(x^k) - sigma |d^k|^2 + tol
/// and, for records with a line search,
///   phi(x^{k+1}) <= phi(x^k) - (sigma + rho lambda_k^2) |d^k|^2 + nu_k + tol.
/// Subgradient-method traces have no y^k and are not checked.
std::vector<DescentViolation> check_descent(const Trace& trace, double sigma, double rho, double tol = 1e-8);

struct DecayCheck {
  int N = 0;
  double min_d = 0.0;  ///< min_{k<N} |d^k|
  double bound = 0.0;  ///< sqrt((phi(x^0) - phi_best + sum nu_k) / (sigma N))
};

/// The min-|d| decay bound for every prefix length N of the trace. Requires sigma > 0.
std::vector<DecayCheck> complexity_decay_path(const Trace& trace, double sigma);

}  // namespace dcboost
