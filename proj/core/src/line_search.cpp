#include <cmath>

#include "dcboost/errors.hpp"
#include "dcboost/solvers.hpp"

namespace dcboost {

LineSearchResult line_search(const ScalarOracle& phi, const Point& y, double phi_y, const Point& d,
                             double lambda_prev, double rho, double zeta, double nu, int max_backtracks) {
  if (!(lambda_prev > 0.0)) throw ConfigError("line_search: lambda_prev must be > 0");
  if (!(nu >= 0.0)) throw ConfigError("line_search: nu must be >= 0");
  if (!(zeta > 0.0 && zeta < 1.0)) throw ConfigError("line_search: zeta must lie in (0, 1)");
  const double d2 = d.squaredNorm();
  if (d2 == 0.0) throw ConfigError("line_search: direction must be nonzero");

  LineSearchResult r;
  r.evals = 1;  // phi(y)
  for (int j = 0; j <= max_backtracks; ++j) {
    const double trial = std::pow(zeta, j) * lambda_prev;
    const double value = phi(y + trial * d);
    ++r.evals;
    if (value <= phi_y - rho * trial * trial * d2 + nu) {
      r.lambda = trial;
      r.j = j;
      r.phi_value = value;
      return r;
    }
  }
  r.lambda = 0.0;
  r.j = max_backtracks + 1;
  r.fallback = true;
  r.phi_value = phi_y;
  return r;
}

LineSearchResult line_search(const ScalarOracle& phi, const Point& y, const Point& d, double lambda_prev,
                             double rho, double zeta, double nu, int max_backtracks) {
  return line_search(phi, y, phi(y), d, lambda_prev, rho, zeta, nu, max_backtracks);
}

}  // namespace dcboost
