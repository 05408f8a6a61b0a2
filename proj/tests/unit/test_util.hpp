#pragma once

#include <random>

#include "dcboost/dc_problem.hpp"

namespace dcboost::testing {

inline Point pt(std::initializer_list<double> v) {
  Point p(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double c : v) p(i++) = c;
  return p;
}

inline Point random_in(const Box& box, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Point x(box.lower.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = box.lower(i) + u(gen) * (box.upper(i) - box.lower(i));
  return x;
}

}  // namespace dcboost::testing
