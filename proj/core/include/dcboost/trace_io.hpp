#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "dcboost/trace.hpp"

namespace dcboost {

/// Header of the per-iteration CSV.
inline constexpr const char* kTraceCsvHeader = "k,phi,phi_gap,step_norm,d_norm,lambda,j,nu,evals,time_s";

/// One row per record: phi = phi(x^k), phi_gap = |phi(x^k) - phi_star| (empty
/// without phi_star), step_norm = |x^{k+1} - x^k|, d_norm = |d^k|,
/// evals = cumulative phi evaluations plus inner-solver evaluations.
/// Reals are written with 17 significant digits.
void write_trace_csv(std::ostream& out, const Trace& trace, std::optional<double> phi_star);

/// Full-iterate sidecar: solver, problem, termination, final_x, final_phi and
/// per record k, x, y, d, w, x_next, phi_x, phi_y, phi_next, lambda, j, nu.
void write_trace_json(std::ostream& out, const Trace& trace);

struct TraceCsvRow {
  int k = 0;
  double phi = 0.0;
  std::optional<double> phi_gap;
  double step_norm = 0.0;
  double d_norm = 0.0;
  double lambda = 0.0;
  int j = 0;
  double nu = 0.0;
  long long evals = 0;
  double time_s = 0.0;
};

/// Parses what write_trace_csv produced. Throws std::runtime_error on a bad header or row.
std::vector<TraceCsvRow> read_trace_csv(std::istream& in);

/// The x^k column of a sidecar written by write_trace_json.
std::vector<Point> read_trace_json_iterates(std::istream& in);

}  // namespace dcboost
