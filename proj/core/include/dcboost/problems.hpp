#pragma once

#include <string>
#include <vector>

#include "dcboost/dc_problem.hpp"

namespace dcboost {

/// A test problem plus the metadata the harness needs.
///
/// Every card carries g_subgrad; selections follow sign(0) = 0 and the
/// lowest-index maximizer of any max{...} term, with max{0, t} taking the
/// t branch only when t > 0. `sigma` is half the smallest modulus shared by
/// g and h, which keeps phi(y) <= phi(x) - sigma |y - x|^2 valid for any
/// inexact subproblem point that does not increase the subproblem objective.
struct ProblemCard {
  std::string id;
  DcProblem problem;
  double default_lambda_init = 1.0;  ///< default lambda_{-1} for nmbdca
  std::string notes;
  bool convexity_verified = true;  ///< false when g or h is not known to be convex as written
};

/// All cards: p6_1 ... p6_7, sec7_subgrad, smooth_quad.
const std::vector<ProblemCard>& catalog();

/// Throws ConfigError for an unknown id.
const ProblemCard& find_card(const std::string& id);

std::vector<std::string> card_ids();

/// Re-decomposes p6_1 or p6_2 with a tunable quadratic:
///   p6_1: g = sin(sqrt|u|) + sigma |x|^2,           h = sigma |x|^2
///   p6_2: g = -5/2 x1 + |x1| + |x2| + sigma |x|^2,  h = (sigma - 1/2) |x|^2
/// phi is unchanged. p6_2 needs sigma > 1/2. Throws ConfigError otherwise or
/// for another base id.
ProblemCard sigma_family(const std::string& base_id, double sigma);

}  // namespace dcboost
