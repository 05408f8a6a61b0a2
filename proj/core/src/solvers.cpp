#include "dcboost/solvers.hpp"

#include <chrono>
#include <cmath>
#include <vector>

#include "dcboost/errors.hpp"

namespace dcboost {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::kConverged: return "converged";
    case Termination::kCriticalPoint: return "critical_point";
    case Termination::kMaxIters: return "max_iters";
    case Termination::kLineSearchFallbackExhausted: return "line_search_fallback_exhausted";
  }
  return "unknown";
}

void SolverConfig::validate() const {
  if (!(lambda_init > 0.0)) throw ConfigError("lambda_init must be > 0");
  if (!(rho > 0.0)) throw ConfigError("rho must be > 0");
  if (!(zeta > 0.0 && zeta < 1.0)) throw ConfigError("zeta must lie in (0, 1)");
  if (!(stop_tol > 0.0)) throw ConfigError("stop_tol must be > 0");
  if (!(crit_tol >= 0.0)) throw ConfigError("crit_tol must be >= 0");
  if (max_outer_iters < 1) throw ConfigError("max_outer_iters must be >= 1");
  if (max_backtracks < 0) throw ConfigError("max_backtracks must be >= 0");
  if (!(ppmdc_alpha > 0.0)) throw ConfigError("ppmdc_alpha must be > 0");
  inner.validate();
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

enum class Method { kDca, kBoosted, kProximal };

Trace run_dc_method(const DcProblem& problem, const Point& x0, const SolverConfig& config, Method method,
                    double alpha, std::string solver_name) {
  problem.validate();
  config.validate();
  if (x0.size() != problem.dim) throw ConfigError("initial point has the wrong dimension");
  if (!all_finite(x0)) throw ConfigError("initial point must be finite");

  Trace trace;
  trace.solver = std::move(solver_name);
  trace.problem = problem.name;

  const auto start = Clock::now();
  EvalCounter counter;
  NuStrategy nu = config.nu;
  const ScalarOracle phi = [&](const Point& x) { return eval_phi(problem, x, counter); };

  Point x = x0;
  std::vector<double> phi_history{phi(x)};
  double trial_step = config.lambda_init;
  trace.termination = Termination::kMaxIters;

  for (int k = 0; k < config.max_outer_iters; ++k) {
    IterRecord rec;
    rec.k = k;
    rec.x = x;
    rec.phi_x = phi_history.back();
    rec.w = subgrad_h(problem, x, counter);

    const ScalarOracle psi = method == Method::kProximal
                                 ? build_ppmdc_subproblem(problem, x, rec.w, alpha)
                                 : build_dca_subproblem(problem, x, rec.w);
    const InnerResult inner = nelder_mead(psi, x, config.inner);
    counter.inner_solver_evals += inner.evaluations;
    rec.inner_converged = inner.converged;
    rec.y = inner.x;
    rec.d = rec.y - x;
    rec.phi_y = phi(rec.y);

    if (rec.d.norm() <= config.crit_tol) {
      rec.x_next = x;
      rec.phi_next = rec.phi_x;
      rec.evals = counter;
      rec.wall_time = seconds_since(start);
      trace.records.push_back(std::move(rec));
      trace.termination = Termination::kCriticalPoint;
      break;
    }

    if (method == Method::kBoosted) {
      NuContext ctx;
      ctx.k = k;
      ctx.d = rec.d;
      ctx.lambda_prev = trial_step;
      ctx.rho = config.rho;
      ctx.zeta = config.zeta;
      ctx.sigma = problem.sigma;
      ctx.phi_history = phi_history;
      ctx.nu_prev = trace.records.empty() ? 0.0 : trace.records.back().nu;
      ctx.g_smooth = problem.g_smooth();
      rec.nu = nu.value(ctx);

      const LineSearchResult ls = line_search(phi, rec.y, rec.phi_y, rec.d, trial_step, config.rho,
                                              config.zeta, rec.nu, config.max_backtracks);
      rec.lambda_prev = trial_step;
      rec.lambda = ls.lambda;
      rec.j = ls.j;
      rec.line_search_evals = ls.evals;
      rec.line_search_fallback = ls.fallback;
      rec.x_next = rec.y + ls.lambda * rec.d;
      rec.phi_next = ls.phi_value;

      ctx.lambda_k = ls.lambda;
      nu.update(rec.phi_next, ctx);
      if (config.trial_step == TrialStep::kCarry && !ls.fallback) trial_step = ls.lambda;
    } else {
      rec.x_next = rec.y;
      rec.phi_next = rec.phi_y;
    }

    const double step = (rec.x_next - x).norm();
    x = rec.x_next;
    phi_history.push_back(rec.phi_next);
    rec.evals = counter;
    rec.wall_time = seconds_since(start);
    trace.records.push_back(std::move(rec));
    if (step < config.stop_tol) {
      trace.termination = Termination::kConverged;
      break;
    }
  }

  trace.final_x = x;
  trace.final_phi = phi_history.back();
  return trace;
}

}  // namespace

Trace dca(const DcProblem& problem, const Point& x0, const SolverConfig& config) {
  return run_dc_method(problem, x0, config, Method::kDca, 0.0, "dca");
}

Trace nmbdca(const DcProblem& problem, const Point& x0, const SolverConfig& config) {
  if (!problem.g_smooth() && !config.nu.strictly_positive()) {
    throw ConfigError("nmbdca: g of '" + problem.name + "' is nonsmooth, so the '" + config.nu.name() +
                      "' growth rule (which allows nu_k = 0) cannot guarantee a finite line search");
  }
  return run_dc_method(problem, x0, config, Method::kBoosted, 0.0, "nmbdca");
}

Trace bdca_monotone(const DcProblem& problem, const Point& x0, const SolverConfig& config) {
  if (!problem.g_smooth()) {
    throw ConfigError("bdca: the monotone boosted DCA needs a differentiable g; '" + problem.name +
                      "' has none");
  }
  SolverConfig monotone = config;
  monotone.nu = nu::Zero{};
  return run_dc_method(problem, x0, monotone, Method::kBoosted, 0.0, "bdca");
}

Trace ppmdc(const DcProblem& problem, const Point& x0, const SolverConfig& config, double alpha) {
  if (!(alpha > 0.0)) throw ConfigError("ppmdc: alpha must be > 0");
  return run_dc_method(problem, x0, config, Method::kProximal, alpha, "ppmdc");
}

SubgradNu subgrad_nu_inverse_square(double omega) {
  return [omega](int k, double s_norm2) {
    const double kp1 = k + 1.0;
    return omega * s_norm2 / (kp1 * kp1);
  };
}

Trace nm_subgradient(const ScalarOracle& f, const VectorOracle& subgrad_f, const Point& x0,
                     const SolverConfig& config, const SubgradNu& nu) {
  config.validate();
  if (!all_finite(x0)) throw ConfigError("nm_subgradient: initial point must be finite");

  Trace trace;
  trace.solver = "nm_subgrad";
  const auto start = Clock::now();
  EvalCounter counter;
  auto value = [&](const Point& x) {
    ++counter.phi_evals;
    const double v = f(x);
    if (!std::isfinite(v)) throw EvalError("nm_subgradient: objective returned a non-finite value");
    return v;
  };

  Point x = x0;
  double fx = value(x);
  double trial_step = config.lambda_init;
  trace.termination = Termination::kMaxIters;

  for (int k = 0; k < config.max_outer_iters; ++k) {
    IterRecord rec;
    rec.k = k;
    rec.x = x;
    rec.y = x;
    rec.phi_x = fx;
    rec.phi_y = fx;
    ++counter.subgrad_evals;
    rec.w = subgrad_f(x);
    if (rec.w.size() != x.size() || !all_finite(rec.w))
      throw EvalError("nm_subgradient: subgradient oracle returned invalid data");
    rec.d = -rec.w;
    const double s2 = rec.w.squaredNorm();

    if (std::sqrt(s2) <= config.crit_tol) {
      rec.x_next = x;
      rec.phi_next = fx;
      rec.evals = counter;
      rec.wall_time = seconds_since(start);
      trace.records.push_back(std::move(rec));
      trace.termination = Termination::kCriticalPoint;
      break;
    }

    rec.nu = nu(k, s2);
    if (!(rec.nu > 0.0)) throw ConfigError("nm_subgradient: the growth budget must be > 0");
    rec.lambda_prev = trial_step;
    rec.line_search_evals = 1;
    rec.j = config.max_backtracks + 1;
    rec.line_search_fallback = true;
    rec.x_next = x;
    rec.phi_next = fx;
    for (int j = 0; j <= config.max_backtracks; ++j) {
      const double t = std::pow(config.zeta, j) * trial_step;
      const Point candidate = x - t * rec.w;
      const double fc = value(candidate);
      ++rec.line_search_evals;
      if (fc <= fx - config.rho * t * s2 + rec.nu) {
        rec.lambda = t;
        rec.j = j;
        rec.line_search_fallback = false;
        rec.x_next = candidate;
        rec.phi_next = fc;
        break;
      }
    }
    if (config.trial_step == TrialStep::kCarry && !rec.line_search_fallback) trial_step = rec.lambda;

    const double step = (rec.x_next - x).norm();
    const bool fell_back = rec.line_search_fallback;
    x = rec.x_next;
    fx = rec.phi_next;
    rec.evals = counter;
    rec.wall_time = seconds_since(start);
    trace.records.push_back(std::move(rec));
    if (fell_back) {
      trace.termination = Termination::kLineSearchFallbackExhausted;
      break;
    }
    if (step < config.stop_tol) {
      trace.termination = Termination::kConverged;
      break;
    }
  }

  trace.final_x = x;
  trace.final_phi = fx;
  return trace;
}

}  // namespace dcboost
