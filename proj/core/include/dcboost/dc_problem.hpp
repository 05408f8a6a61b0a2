#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <Eigen/Core>

namespace dcboost {

/// Iterates, directions and subgradients all live in R^n.
using Point = Eigen::VectorXd;

using ScalarOracle = std::function<double(const Point&)>;
using VectorOracle = std::function<Point(const Point&)>;

bool all_finite(const Point& x);

struct Box {
  Point lower;
  Point upper;

  static Box uniform(int dim, double lo, double hi);
  bool contains(const Point& x) const;
};

struct KnownOptimum {
  Point x;
  double value = 0.0;
};

/// A DC program: minimize phi = g - h over R^n.
///
/// `sigma` is the strong-convexity modulus shared by g and h. Test cards whose
/// components are only convex as written declare sigma = 0; every solver still
/// runs on them, but the theory-backed diagnostics degrade to plain descent.
/// `g_subgrad` is optional and used only by diagnostics and the subgradient
/// method. `g_grad` is present iff g is continuously differentiable.
struct DcProblem {
  std::string name;
  int dim = 0;
  ScalarOracle g;
  ScalarOracle h;
  VectorOracle h_subgrad;
  std::optional<VectorOracle> g_subgrad;
  std::optional<VectorOracle> g_grad;
  double sigma = 0.0;
  std::optional<double> lipschitz_L;
  std::optional<KnownOptimum> optimum;
  Box init_box;

  bool g_smooth() const { return g_grad.has_value(); }

  /// Throws ConfigError on structural problems (missing oracles, bad dims,
  /// negative sigma, inverted init box).
  void validate() const;
};

struct EvalCounter {
  std::int64_t phi_evals = 0;
  std::int64_t g_evals = 0;
  std::int64_t h_evals = 0;
  std::int64_t subgrad_evals = 0;
  std::int64_t inner_solver_evals = 0;
};

// Oracle wrappers. Each checks the input dimension, bumps the counter and
// throws EvalError naming the component if the oracle returns non-finite data.
double eval_g(const DcProblem& problem, const Point& x, EvalCounter& counter);
double eval_h(const DcProblem& problem, const Point& x, EvalCounter& counter);
double eval_phi(const DcProblem& problem, const Point& x, EvalCounter& counter);
Point subgrad_h(const DcProblem& problem, const Point& x, EvalCounter& counter);

double eval_phi(const DcProblem& problem, const Point& x);
Point subgrad_h(const DcProblem& problem, const Point& x);

/// g' = g + (s/2)|x|^2 and h' = h + (s/2)|x|^2 with s = sigma_add; phi is
/// unchanged pointwise and the declared modulus grows by sigma_add.
DcProblem strong_convexify(const DcProblem& problem, double sigma_add);

/// sign with sign(0) = 0, the selection used at |.| kinks.
inline double sign0(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace dcboost
