#include "dcboost/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dcboost/errors.hpp"

namespace dcboost {

StepBound diagnostics_step_bound(const DcProblem& problem, const Point& x_k, const Point& y_k, double nu_k,
                                 double rho) {
  if (!(nu_k > 0.0)) throw ConfigError("diagnostics_step_bound: nu_k must be > 0");
  if (!(rho > 0.0)) throw ConfigError("diagnostics_step_bound: rho must be > 0");
  const Point d = y_k - x_k;
  const double d2 = d.squaredNorm();
  if (d2 == 0.0) throw ConfigError("diagnostics_step_bound: d_k must be nonzero");

  EvalCounter scratch;
  const double denom =
      eval_g(problem, y_k + d, scratch) + eval_g(problem, x_k, scratch) - 2.0 * eval_g(problem, y_k, scratch);
  if (denom < problem.sigma * d2 - 1e-9) {
    throw InvariantViolation("g(y+d) + g(x) - 2g(y) = " + std::to_string(denom) + " is below sigma |d|^2 = " +
                             std::to_string(problem.sigma * d2) + " on '" + problem.name + "'");
  }
  if (!(denom > 0.0)) {
    throw InvariantViolation("g(y+d) + g(x) - 2g(y) must be positive on '" + problem.name + "'");
  }
  StepBound b;
  b.delta_hat = nu_k / denom;
  b.delta_k = std::min({b.delta_hat, 1.0, 3.0 * problem.sigma / (2.0 * rho)});
  return b;
}

double lambda_min(double lambda_init, double zeta, double sigma, double lipschitz_L, double rho) {
  return std::min(lambda_init, 2.0 * zeta * sigma / (lipschitz_L + 2.0 * rho));
}

std::vector<EvalBound> diagnostics_eval_bound_path(const Trace& trace, double lambda_min, double zeta,
                                                   double lambda_init) {
  if (!(lambda_min > 0.0 && lambda_init > 0.0)) throw ConfigError("eval bound: step sizes must be > 0");
  if (!(zeta > 0.0 && zeta < 1.0)) throw ConfigError("eval bound: zeta must lie in (0, 1)");
  const double tail = (std::log(lambda_min) - std::log(lambda_init)) / std::log(zeta);
  std::vector<EvalBound> out;
  std::int64_t J = 0;
  int k = 0;
  for (const auto& rec : trace.records) {
    if (rec.line_search_evals == 0) continue;
    J += rec.j + 2;
    out.push_back({k, J, 2.0 * (k + 1) + tail});
    ++k;
  }
  return out;
}

EvalBound diagnostics_eval_bound(const Trace& trace, double lambda_min, double zeta, double lambda_init) {
  const auto path = diagnostics_eval_bound_path(trace, lambda_min, zeta, lambda_init);
  return path.empty() ? EvalBound{} : path.back();
}

std::vector<DescentViolation> check_descent(const Trace& trace, double sigma, double rho, double tol) {
  std::vector<DescentViolation> out;
  if (trace.solver == "nm_subgrad") return out;
  for (const auto& rec : trace.records) {
    const double d2 = rec.d.squaredNorm();
    const double dca_rhs = rec.phi_x - sigma * d2 + tol;
    if (!(rec.phi_y <= dca_rhs)) out.push_back({rec.k, "dca", rec.phi_y, dca_rhs});
    if (rec.line_search_evals > 0) {
      const double rhs = rec.phi_x - (sigma + rho * rec.lambda * rec.lambda) * d2 + rec.nu + tol;
      if (!(rec.phi_next <= rhs)) out.push_back({rec.k, "boosted", rec.phi_next, rhs});
    }
  }
  return out;
}

std::vector<DecayCheck> complexity_decay_path(const Trace& trace, double sigma) {
  if (!(sigma > 0.0)) throw ConfigError("complexity_decay_path: sigma must be > 0");
  std::vector<DecayCheck> out;
  if (trace.records.empty()) return out;
  const double phi0 = trace.records.front().phi_x;
  double phi_best = phi0;
  double nu_sum = 0.0;
  double min_d = std::numeric_limits<double>::infinity();
  int n = 0;
  for (const auto& rec : trace.records) {
    ++n;
    min_d = std::min(min_d, rec.d.norm());
    nu_sum += rec.nu;
    phi_best = std::min({phi_best, rec.phi_y, rec.phi_next});
    const double num = std::max(0.0, phi0 - phi_best + nu_sum);
    out.push_back({n, min_d, std::sqrt(num / (sigma * n))});
  }
  return out;
}

}  // namespace dcboost
