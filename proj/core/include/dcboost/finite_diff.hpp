#pragma once

#include "dcboost/dc_problem.hpp"

namespace dcboost {

inline constexpr double kDefaultFdStep = 1e-6;

/// One-sided difference (f(x + step d) - f(x)) / step. Approximates the
/// directional derivative f'(x; d), which for nonsmooth f differs from the
/// negated derivative along -d.
double fd_directional_derivative(const ScalarOracle& f, const Point& x, const Point& d,
                                 double step = kDefaultFdStep);

/// Central-difference gradient; only meaningful where f is differentiable.
Point fd_central_gradient(const ScalarOracle& f, const Point& x, double step = kDefaultFdStep);

/// True when the forward and backward one-sided partials of f at x agree to
/// `tol` in every coordinate, i.e. x is (numerically) away from kinks.
bool fd_looks_smooth(const ScalarOracle& f, const Point& x, double tol, double step = kDefaultFdStep);

}  // namespace dcboost
