#include "dcboost/problems.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dcboost/errors.hpp"

namespace dcboost {

namespace {

Point vec(std::initializer_list<double> v) {
  Point p(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double c : v) p(i++) = c;
  return p;
}

double pos(double t) { return t > 0.0 ? t : 0.0; }
double step(double t) { return t > 0.0 ? 1.0 : 0.0; }

// Index of the first maximal entry.
template <std::size_t N>
std::size_t argmax_first(const std::array<double, N>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < N; ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

DcProblem base(std::string name, int dim, double sigma) {
  DcProblem p;
  p.name = std::move(name);
  p.dim = dim;
  p.sigma = sigma;
  p.init_box = Box::uniform(dim, -10.0, 10.0);
  return p;
}

// u = 3 x1 + |x1 - x2| + 2 x2 and the sin(sqrt|u|) term shared by the p6_1 family.
double sine_term(const Point& x) {
  const double u = 3.0 * x(0) + std::abs(x(0) - x(1)) + 2.0 * x(1);
  return std::sin(std::sqrt(std::abs(u)));
}

Point sine_term_subgrad(const Point& x) {
  const double u = 3.0 * x(0) + std::abs(x(0) - x(1)) + 2.0 * x(1);
  if (u == 0.0) return Point::Zero(2);
  const double r = std::sqrt(std::abs(u));
  const double s = sign0(x(0) - x(1));
  return std::cos(r) / (2.0 * r) * sign0(u) * vec({3.0 + s, 2.0 - s});
}

ProblemCard make_p6_1_family(double sigma, std::string id) {
  ProblemCard c;
  c.id = id;
  c.problem = base(std::move(id), 2, sigma);
  c.problem.g = [sigma](const Point& x) { return sine_term(x) + sigma * x.squaredNorm(); };
  c.problem.g_subgrad = [sigma](const Point& x) -> Point { return sine_term_subgrad(x) + 2.0 * sigma * x; };
  c.problem.h = [sigma](const Point& x) { return sigma * x.squaredNorm(); };
  c.problem.h_subgrad = [sigma](const Point& x) -> Point { return 2.0 * sigma * x; };
  // phi = sin(sqrt|u|) >= -1, attained where |u| = 9 pi^2 / 4; on x1 = x2 = t, u = 5 t.
  const double t = 9.0 * std::numbers::pi * std::numbers::pi / 20.0;
  c.problem.optimum = KnownOptimum{vec({t, t}), -1.0};
  c.default_lambda_init = 3.9;
  c.convexity_verified = false;
  c.notes =
      "as-printed, convexity unverified: sin(sqrt|u|) has a cusp along u = 0, so g is not convex there "
      "for any quadratic weight; h is convex";
  return c;
}

ProblemCard make_p6_2_family(double sigma, std::string id) {
  const double hs = sigma - 0.5;
  ProblemCard c;
  c.id = id;
  c.problem = base(std::move(id), 2, hs);
  c.problem.g = [sigma](const Point& x) {
    return -2.5 * x(0) + std::abs(x(0)) + std::abs(x(1)) + sigma * x.squaredNorm();
  };
  c.problem.g_subgrad = [sigma](const Point& x) -> Point {
    return vec({-2.5 + sign0(x(0)), sign0(x(1))}) + 2.0 * sigma * x;
  };
  c.problem.h = [hs](const Point& x) { return hs * x.squaredNorm(); };
  c.problem.h_subgrad = [hs](const Point& x) -> Point { return 2.0 * hs * x; };
  c.problem.optimum = KnownOptimum{vec({1.5, 0.0}), -1.125};
  c.default_lambda_init = 16.0;
  return c;
}

ProblemCard p6_3() {
  ProblemCard c;
  c.id = "p6_3";
  c.problem = base("p6_3", 2, 2.0);
  struct Parts {
    std::array<double, 3> f1;
    std::array<double, 3> f2;
    std::array<Point, 3> df1;
    std::array<Point, 3> df2;
  };
  auto parts = [](const Point& x) {
    const double a = x(0), b = x(1);
    const double e = 2.0 * std::exp(-a + b);
    Parts p;
    p.f1 = {a * a * a * a + b * b, (2.0 - a) * (2.0 - a) + (2.0 - b) * (2.0 - b), e};
    p.f2 = {a * a - 2.0 * a + b * b - 4.0 * b + 4.0, 2.0 * a * a - 5.0 * a + b * b - 2.0 * b + 4.0,
            a * a + 2.0 * b * b - 4.0 * b + 1.0};
    p.df1 = {vec({4.0 * a * a * a, 2.0 * b}), vec({-2.0 * (2.0 - a), -2.0 * (2.0 - b)}), vec({-e, e})};
    p.df2 = {vec({2.0 * a - 2.0, 2.0 * b - 4.0}), vec({4.0 * a - 5.0, 2.0 * b - 2.0}),
             vec({2.0 * a, 4.0 * b - 4.0})};
    return p;
  };
  c.problem.g = [parts](const Point& x) {
    const Parts p = parts(x);
    return std::max({p.f1[0], p.f1[1], p.f1[2]}) + p.f2[0] + p.f2[1] + p.f2[2];
  };
  c.problem.g_subgrad = [parts](const Point& x) -> Point {
    const Parts p = parts(x);
    return p.df1[argmax_first(p.f1)] + p.df2[0] + p.df2[1] + p.df2[2];
  };
  c.problem.h = [parts](const Point& x) {
    const Parts p = parts(x);
    return std::max({p.f2[0] + p.f2[1], p.f2[1] + p.f2[2], p.f2[0] + p.f2[2]});
  };
  c.problem.h_subgrad = [parts](const Point& x) -> Point {
    const Parts p = parts(x);
    const std::array<double, 3> v{p.f2[0] + p.f2[1], p.f2[1] + p.f2[2], p.f2[0] + p.f2[2]};
    switch (argmax_first(v)) {
      case 0: return p.df2[0] + p.df2[1];
      case 1: return p.df2[1] + p.df2[2];
      default: return p.df2[0] + p.df2[2];
    }
  };
  c.problem.optimum = KnownOptimum{vec({1.0, 1.0}), 2.0};
  c.default_lambda_init = 1.5;
  c.notes = "h is a max of quadratics with Hessians diag(6,4), diag(6,6), diag(4,6)";
  return c;
}

// |x1 - 1| + 200 max{0, |x1| - x2} and 100 (|x1| - x2) recur in p6_4, p6_5, p6_6.
double g_core(const Point& x) { return std::abs(x(0) - 1.0) + 200.0 * pos(std::abs(x(0)) - x(1)); }
Point g_core_subgrad(const Point& x) {
  return vec({sign0(x(0) - 1.0), 0.0}) + 200.0 * step(std::abs(x(0)) - x(1)) * vec({sign0(x(0)), -1.0});
}

ProblemCard p6_4() {
  ProblemCard c;
  c.id = "p6_4";
  c.problem = base("p6_4", 2, 0.0);
  c.problem.g = g_core;
  c.problem.g_subgrad = g_core_subgrad;
  c.problem.h = [](const Point& x) { return 100.0 * (std::abs(x(0)) - x(1)); };
  c.problem.h_subgrad = [](const Point& x) -> Point { return vec({100.0 * sign0(x(0)), -100.0}); };
  c.problem.optimum = KnownOptimum{vec({1.0, 1.0}), 0.0};
  c.default_lambda_init = 5.4;
  c.notes = "piecewise linear, declared sigma = 0";
  return c;
}

ProblemCard p6_5() {
  ProblemCard c;
  c.id = "p6_5";
  c.problem = base("p6_5", 4, 0.0);
  c.problem.g = [](const Point& x) {
    return std::abs(x(0) - 1.0) + 200.0 * pos(std::abs(x(0)) - x(1)) + 180.0 * pos(std::abs(x(2)) - x(3)) +
           std::abs(x(2) - 1.0) + 10.1 * (std::abs(x(1) - 1.0) + std::abs(x(3) - 1.0)) +
           4.95 * std::abs(x(1) + x(3) - 2.0);
  };
  c.problem.g_subgrad = [](const Point& x) -> Point {
    Point s = Point::Zero(4);
    s(0) += sign0(x(0) - 1.0);
    const double a = 200.0 * step(std::abs(x(0)) - x(1));
    s(0) += a * sign0(x(0));
    s(1) -= a;
    const double b = 180.0 * step(std::abs(x(2)) - x(3));
    s(2) += b * sign0(x(2));
    s(3) -= b;
    s(2) += sign0(x(2) - 1.0);
    s(1) += 10.1 * sign0(x(1) - 1.0);
    s(3) += 10.1 * sign0(x(3) - 1.0);
    const double t = 4.95 * sign0(x(1) + x(3) - 2.0);
    s(1) += t;
    s(3) += t;
    return s;
  };
  c.problem.h = [](const Point& x) {
    return 100.0 * (std::abs(x(0)) - x(1)) + 90.0 * (std::abs(x(2)) - x(3)) + 4.95 * std::abs(x(1) - x(3));
  };
  c.problem.h_subgrad = [](const Point& x) -> Point {
    const double t = 4.95 * sign0(x(1) - x(3));
    return vec({100.0 * sign0(x(0)), -100.0 + t, 90.0 * sign0(x(2)), -90.0 - t});
  };
  c.problem.optimum = KnownOptimum{vec({1.0, 1.0, 1.0, 1.0}), 0.0};
  c.default_lambda_init = 2.8;
  c.notes = "piecewise linear, declared sigma = 0";
  return c;
}

ProblemCard p6_6() {
  ProblemCard c;
  c.id = "p6_6";
  c.problem = base("p6_6", 2, 10.0);
  auto q = [](const Point& x) {
    const double a = x(0), b = x(1), r = a * a + b * b;
    return std::array<double, 4>{r + std::abs(b), a + r + std::abs(b) - 0.5, std::abs(a - b) + std::abs(b) - 1.0,
                                 a + r};
  };
  c.problem.g = [q](const Point& x) {
    const auto v = q(x);
    return g_core(x) + 10.0 * std::max({v[0], v[1], v[2], v[3]});
  };
  c.problem.g_subgrad = [q](const Point& x) -> Point {
    const double a = x(0), b = x(1);
    Point dq;
    switch (argmax_first(q(x))) {
      case 0: dq = vec({2.0 * a, 2.0 * b + sign0(b)}); break;
      case 1: dq = vec({1.0 + 2.0 * a, 2.0 * b + sign0(b)}); break;
      case 2: dq = vec({sign0(a - b), -sign0(a - b) + sign0(b)}); break;
      default: dq = vec({1.0 + 2.0 * a, 2.0 * b}); break;
    }
    return g_core_subgrad(x) + 10.0 * dq;
  };
  c.problem.h = [](const Point& x) {
    return 100.0 * (std::abs(x(0)) - x(1)) + 10.0 * (x.squaredNorm() + std::abs(x(1)));
  };
  c.problem.h_subgrad = [](const Point& x) -> Point {
    return vec({100.0 * sign0(x(0)) + 20.0 * x(0), -100.0 + 20.0 * x(1) + 10.0 * sign0(x(1))});
  };
  c.problem.optimum = KnownOptimum{vec({0.5, 0.5}), 0.5};
  c.default_lambda_init = 30.0;
  c.notes = "the |x1 - x2| + |x2| - 1 branch never attains the max, so both components carry 10 |x|^2";
  return c;
}

ProblemCard p6_7() {
  ProblemCard c;
  c.id = "p6_7";
  c.problem = base("p6_7", 3, 0.0);
  auto m = [](const Point& x) {
    return std::array<double, 5>{0.0, x(0) + x(1) + 2.0 * x(2) - 3.0, -x(0), -x(1), -x(2)};
  };
  c.problem.g = [m](const Point& x) {
    const auto v = m(x);
    return 9.0 - 8.0 * x(0) - 6.0 * x(1) - 4.0 * x(2) + 2.0 * x.cwiseAbs().sum() + 4.0 * x(0) * x(0) +
           2.0 * x(1) * x(1) + 2.0 * x(2) * x(2) + 10.0 * v[argmax_first(v)];
  };
  c.problem.g_subgrad = [m](const Point& x) -> Point {
    Point s = vec({-8.0 + 8.0 * x(0), -6.0 + 4.0 * x(1), -4.0 + 4.0 * x(2)});
    for (int i = 0; i < 3; ++i) s(i) += 2.0 * sign0(x(i));
    switch (argmax_first(m(x))) {
      case 0: break;
      case 1: s += 10.0 * vec({1.0, 1.0, 2.0}); break;
      default: s(static_cast<int>(argmax_first(m(x))) - 2) -= 10.0; break;
    }
    return s;
  };
  c.problem.h = [](const Point& x) { return std::abs(x(0) - x(1)) + std::abs(x(0) - x(2)); };
  c.problem.h_subgrad = [](const Point& x) -> Point {
    const double a = sign0(x(0) - x(1)), b = sign0(x(0) - x(2));
    return vec({a + b, -a, -b});
  };
  c.problem.optimum = KnownOptimum{vec({0.75, 1.25, 0.25}), 3.5};
  c.default_lambda_init = 6.6;
  c.notes = "h is piecewise linear, declared sigma = 0";
  return c;
}

ProblemCard sec7_subgrad() {
  ProblemCard c;
  c.id = "sec7_subgrad";
  c.problem = base("sec7_subgrad", 2, 0.0);
  c.problem.g = [](const Point& x) { return x.squaredNorm() / 4.0 + std::abs(x(0)) + 2.0 * std::abs(x(1)); };
  c.problem.g_subgrad = [](const Point& x) -> Point {
    return vec({x(0) / 2.0 + sign0(x(0)), x(1) / 2.0 + 2.0 * sign0(x(1))});
  };
  c.problem.h = [](const Point&) { return 0.0; };
  c.problem.h_subgrad = [](const Point& x) -> Point { return Point::Zero(x.size()); };
  c.problem.optimum = KnownOptimum{vec({0.0, 0.0}), 0.0};
  c.default_lambda_init = 1.0;
  c.notes = "convex f with h = 0; the subgradient-method example";
  return c;
}

ProblemCard smooth_quad() {
  ProblemCard c;
  c.id = "smooth_quad";
  c.problem = base("smooth_quad", 2, 0.5);
  c.problem.g = [](const Point& x) { return x.squaredNorm(); };
  c.problem.g_grad = [](const Point& x) -> Point { return 2.0 * x; };
  c.problem.g_subgrad = *c.problem.g_grad;
  c.problem.lipschitz_L = 2.0;
  c.problem.h = [](const Point& x) { return 0.5 * x.squaredNorm() + x.cwiseAbs().sum(); };
  c.problem.h_subgrad = [](const Point& x) -> Point { return x + x.unaryExpr([](double v) { return sign0(v); }); };
  c.problem.optimum = KnownOptimum{vec({1.0, 1.0}), -1.0};
  c.default_lambda_init = 4.0;
  c.notes = "g = |x|^2 (modulus 2, L = 2), h = |x|^2/2 + |x|_1 (modulus 1); minima at x = (+-1, +-1)";
  return c;
}

}  // namespace

const std::vector<ProblemCard>& catalog() {
  static const std::vector<ProblemCard> cards = [] {
    std::vector<ProblemCard> v;
    v.push_back(make_p6_1_family(5.0, "p6_1"));
    v.push_back(make_p6_2_family(1.0, "p6_2"));
    v.push_back(p6_3());
    v.push_back(p6_4());
    v.push_back(p6_5());
    v.push_back(p6_6());
    v.push_back(p6_7());
    v.push_back(sec7_subgrad());
    v.push_back(smooth_quad());
    return v;
  }();
  return cards;
}

const ProblemCard& find_card(const std::string& id) {
  for (const auto& c : catalog())
    if (c.id == id) return c;
  throw ConfigError("unknown problem id '" + id + "'");
}

std::vector<std::string> card_ids() {
  std::vector<std::string> ids;
  for (const auto& c : catalog()) ids.push_back(c.id);
  return ids;
}

ProblemCard sigma_family(const std::string& base_id, double sigma) {
  if (!std::isfinite(sigma)) throw ConfigError("sigma_family: sigma must be finite");
  std::ostringstream id;
  id << base_id << "_sigma" << sigma;
  if (base_id == "p6_1") {
    if (!(sigma > 0.0)) throw ConfigError("sigma_family(p6_1): sigma must be > 0");
    return make_p6_1_family(sigma, id.str());
  }
  if (base_id == "p6_2") {
    if (!(sigma > 0.5)) throw ConfigError("sigma_family(p6_2): sigma must be > 0.5 for h to be strongly convex");
    return make_p6_2_family(sigma, id.str());
  }
  throw ConfigError("sigma_family: base must be p6_1 or p6_2, got '" + base_id + "'");
}

}  // namespace dcboost
