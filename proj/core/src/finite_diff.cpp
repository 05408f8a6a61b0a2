#include "dcboost/finite_diff.hpp"

#include <cmath>

#include "dcboost/errors.hpp"

namespace dcboost {

double fd_directional_derivative(const ScalarOracle& f, const Point& x, const Point& d, double step) {
  if (!(step > 0.0)) throw ConfigError("fd_directional_derivative: step must be > 0");
  if (d.size() != x.size()) throw ConfigError("fd_directional_derivative: dimension mismatch");
  if (d.squaredNorm() == 0.0) throw ConfigError("fd_directional_derivative: direction must be nonzero");
  const double r = (f(x + step * d) - f(x)) / step;
  if (!std::isfinite(r)) throw EvalError("fd_directional_derivative: non-finite result");
  return r;
}

Point fd_central_gradient(const ScalarOracle& f, const Point& x, double step) {
  Point grad(x.size());
  Point probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + step;
    const double fp = f(probe);
    probe[i] = x[i] - step;
    const double fm = f(probe);
    probe[i] = x[i];
    grad[i] = (fp - fm) / (2.0 * step);
  }
  if (!all_finite(grad)) throw EvalError("fd_central_gradient: non-finite result");
  return grad;
}

bool fd_looks_smooth(const ScalarOracle& f, const Point& x, double tol, double step) {
  const double f0 = f(x);
  Point probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + step;
    const double forward = (f(probe) - f0) / step;
    probe[i] = x[i] - step;
    const double backward = (f0 - f(probe)) / step;
    probe[i] = x[i];
    const double scale = std::max({1.0, std::abs(forward), std::abs(backward)});
    if (std::abs(forward - backward) > tol * scale) return false;
  }
  return true;
}

}  // namespace dcboost
