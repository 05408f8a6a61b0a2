#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "dcboost/errors.hpp"
#include "dcboost/inner_solver.hpp"

namespace dcboost {

void InnerConfig::validate() const {
  if (!(tol_x > 0.0) || !(tol_f > 0.0)) throw ConfigError("InnerConfig: tolerances must be > 0");
  if (max_inner_iters < 0) throw ConfigError("InnerConfig: max_inner_iters must be >= 0");
}

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;
constexpr double kNonzeroDelta = 0.05;
constexpr double kZeroDelta = 0.00025;

struct Simplex {
  std::vector<Point> vertex;
  std::vector<double> value;

  // Stable sort keeps the older vertex first among ties.
  void sort() {
    std::vector<std::size_t> order(vertex.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return less(value[a], value[b]);
    });
    std::vector<Point> v;
    std::vector<double> f;
    v.reserve(order.size());
    f.reserve(order.size());
    for (std::size_t i : order) {
      v.push_back(std::move(vertex[i]));
      f.push_back(value[i]);
    }
    vertex = std::move(v);
    value = std::move(f);
  }

  // NaN compares as +inf so a poisoned vertex is always the first to go.
  static bool less(double a, double b) {
    if (std::isnan(a)) return false;
    if (std::isnan(b)) return true;
    return a < b;
  }
};

}  // namespace

InnerResult nelder_mead(const ScalarOracle& f, const Point& x_init, const InnerConfig& config) {
  config.validate();
  if (!all_finite(x_init)) throw ConfigError("nelder_mead: x_init must be finite");
  const auto n = static_cast<std::size_t>(x_init.size());
  const int max_iters = config.iteration_cap(static_cast<int>(n));

  InnerResult result;
  auto eval = [&](const Point& x) {
    ++result.evaluations;
    return f(x);
  };

  Simplex s;
  s.vertex.reserve(n + 1);
  s.value.reserve(n + 1);
  s.vertex.push_back(x_init);
  for (std::size_t k = 0; k < n; ++k) {
    Point y = x_init;
    const auto i = static_cast<Eigen::Index>(k);
    y[i] = y[i] != 0.0 ? (1.0 + kNonzeroDelta) * y[i] : kZeroDelta;
    s.vertex.push_back(std::move(y));
  }
  for (const Point& v : s.vertex) s.value.push_back(eval(v));
  s.sort();

  int iterations = 1;
  bool converged = false;
  while (iterations < max_iters) {
    double x_spread = 0.0;
    double f_spread = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      x_spread = std::max(x_spread, (s.vertex[k] - s.vertex[0]).cwiseAbs().maxCoeff());
      f_spread = std::max(f_spread, std::abs(s.value[0] - s.value[k]));
    }
    if (x_spread <= config.tol_x && f_spread <= config.tol_f) {
      converged = true;
      break;
    }

    Point centroid = Point::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) centroid += s.vertex[k];
    centroid /= static_cast<double>(n);
    const Point& worst = s.vertex[n];

    const Point xr = (1.0 + kReflect) * centroid - kReflect * worst;
    const double fr = eval(xr);

    bool shrink = false;
    if (fr < s.value[0]) {
      const Point xe = (1.0 + kReflect * kExpand) * centroid - kReflect * kExpand * worst;
      const double fe = eval(xe);
      if (fe < fr) {
        s.vertex[n] = xe;
        s.value[n] = fe;
      } else {
        s.vertex[n] = xr;
        s.value[n] = fr;
      }
    } else if (fr < s.value[n - 1]) {
      s.vertex[n] = xr;
      s.value[n] = fr;
    } else if (fr < s.value[n]) {
      const Point xc = (1.0 + kContract * kReflect) * centroid - kContract * kReflect * worst;
      const double fc = eval(xc);
      if (fc <= fr) {
        s.vertex[n] = xc;
        s.value[n] = fc;
      } else {
        shrink = true;
      }
    } else {
      const Point xcc = (1.0 - kContract) * centroid + kContract * worst;
      const double fcc = eval(xcc);
      if (fcc < s.value[n]) {
        s.vertex[n] = xcc;
        s.value[n] = fcc;
      } else {
        shrink = true;
      }
    }
    if (shrink) {
      for (std::size_t k = 1; k <= n; ++k) {
        s.vertex[k] = s.vertex[0] + kShrink * (s.vertex[k] - s.vertex[0]);
        s.value[k] = eval(s.vertex[k]);
      }
    }
    ++iterations;
    s.sort();
  }

  result.x = s.vertex[0];
  result.value = s.value[0];
  result.iterations = iterations;
  result.converged = converged;
  return result;
}

}  // namespace dcboost
