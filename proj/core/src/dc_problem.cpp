#include "dcboost/dc_problem.hpp"

#include <cmath>
#include <string>

#include "dcboost/errors.hpp"

namespace dcboost {

bool all_finite(const Point& x) { return x.allFinite(); }

Box Box::uniform(int dim, double lo, double hi) {
  return Box{Point::Constant(dim, lo), Point::Constant(dim, hi)};
}

bool Box::contains(const Point& x) const {
  return x.size() == lower.size() && (x.array() >= lower.array()).all() &&
         (x.array() <= upper.array()).all();
}

void DcProblem::validate() const {
  if (dim <= 0) throw ConfigError(name + ": dimension must be positive");
  if (!g || !h || !h_subgrad) throw ConfigError(name + ": g, h and h_subgrad oracles are required");
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw ConfigError(name + ": sigma must be finite and >= 0");
  if (lipschitz_L && !(*lipschitz_L > 0.0)) throw ConfigError(name + ": Lipschitz constant must be > 0");
  if (init_box.lower.size() != dim || init_box.upper.size() != dim)
    throw ConfigError(name + ": init box dimension mismatch");
  if ((init_box.lower.array() > init_box.upper.array()).any())
    throw ConfigError(name + ": init box has lower > upper");
  if (optimum && optimum->x.size() != dim) throw ConfigError(name + ": optimum dimension mismatch");
}

namespace {

void check_dim(const DcProblem& problem, const Point& x) {
  if (x.size() != problem.dim) {
    throw ConfigError(problem.name + ": point has dimension " + std::to_string(x.size()) +
                      ", expected " + std::to_string(problem.dim));
  }
}

double checked(const DcProblem& problem, const char* component, double v) {
  if (!std::isfinite(v)) throw EvalError(problem.name + ": oracle " + component + " returned a non-finite value");
  return v;
}

}  // namespace

double eval_g(const DcProblem& problem, const Point& x, EvalCounter& counter) {
  check_dim(problem, x);
  ++counter.g_evals;
  return checked(problem, "g", problem.g(x));
}

double eval_h(const DcProblem& problem, const Point& x, EvalCounter& counter) {
  check_dim(problem, x);
  ++counter.h_evals;
  return checked(problem, "h", problem.h(x));
}

double eval_phi(const DcProblem& problem, const Point& x, EvalCounter& counter) {
  const double gv = eval_g(problem, x, counter);
  const double hv = eval_h(problem, x, counter);
  ++counter.phi_evals;
  return gv - hv;
}

Point subgrad_h(const DcProblem& problem, const Point& x, EvalCounter& counter) {
  check_dim(problem, x);
  ++counter.subgrad_evals;
  Point w = problem.h_subgrad(x);
  if (w.size() != problem.dim) throw EvalError(problem.name + ": oracle h_subgrad returned wrong dimension");
  if (!all_finite(w)) throw EvalError(problem.name + ": oracle h_subgrad returned a non-finite vector");
  return w;
}

double eval_phi(const DcProblem& problem, const Point& x) {
  EvalCounter scratch;
  return eval_phi(problem, x, scratch);
}

Point subgrad_h(const DcProblem& problem, const Point& x) {
  EvalCounter scratch;
  return subgrad_h(problem, x, scratch);
}

DcProblem strong_convexify(const DcProblem& problem, double sigma_add) {
  if (!(sigma_add > 0.0)) throw ConfigError("strong_convexify: sigma_add must be > 0");
  DcProblem out = problem;
  const double half = 0.5 * sigma_add;
  out.name = problem.name + "+sc";
  out.g = [g = problem.g, half](const Point& x) { return g(x) + half * x.squaredNorm(); };
  out.h = [h = problem.h, half](const Point& x) { return h(x) + half * x.squaredNorm(); };
  out.h_subgrad = [s = problem.h_subgrad, sigma_add](const Point& x) -> Point {
    return s(x) + sigma_add * x;
  };
  if (problem.g_subgrad) {
    out.g_subgrad = [s = *problem.g_subgrad, sigma_add](const Point& x) -> Point {
      return s(x) + sigma_add * x;
    };
  }
  if (problem.g_grad) {
    out.g_grad = [s = *problem.g_grad, sigma_add](const Point& x) -> Point {
      return s(x) + sigma_add * x;
    };
  }
  if (problem.lipschitz_L) out.lipschitz_L = *problem.lipschitz_L + sigma_add;
  out.sigma = problem.sigma + sigma_add;
  return out;
}

}  // namespace dcboost
