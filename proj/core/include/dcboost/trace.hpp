#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dcboost/dc_problem.hpp"

namespace dcboost {

/// One outer iteration. For the DCA-type methods y is the subproblem solution
/// and d = y - x; for the subgradient method y = x, w = s^k and d = -s^k.
struct IterRecord {
  int k = 0;
  Point x;
  Point y;
  Point d;
  Point w;
  Point x_next;
  double phi_x = 0.0;
  double phi_y = 0.0;
  double phi_next = 0.0;
  double lambda_prev = 0.0;  ///< trial step the line search started from
  double lambda = 0.0;       ///< accepted step; 0 when no boost was taken
  int j = 0;                 ///< backtracks; max_backtracks + 1 on fallback
  double nu = 0.0;
  int line_search_evals = 0;  ///< phi evaluations spent by this iteration's line search
  bool line_search_fallback = false;
  bool inner_converged = true;
  EvalCounter evals;  ///< cumulative at the end of the iteration
  double wall_time = 0.0;  ///< seconds since the run started
};

enum class Termination { kConverged, kCriticalPoint, kMaxIters, kLineSearchFallbackExhausted };

std::string_view to_string(Termination t);

struct Trace {
  std::string solver;
  std::string problem;
  std::vector<IterRecord> records;
  Termination termination = Termination::kMaxIters;
  Point final_x;
  double final_phi = 0.0;

  /// Outer iterations performed, i.e. the number of records.
  int iterations() const { return static_cast<int>(records.size()); }
  double wall_time() const { return records.empty() ? 0.0 : records.back().wall_time; }
};

}  // namespace dcboost
