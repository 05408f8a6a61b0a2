#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dcboost/diagnostics.hpp"
#include "dcboost/problems.hpp"
#include "dcboost/solvers.hpp"

namespace dcboost {

enum class SolverKind { kDca, kBdca, kNmbdca, kPpmdc, kNmSubgrad };

/// dca, bdca, nmbdca, ppmdc, nm_subgrad. Throws ConfigError otherwise.
SolverKind parse_solver(const std::string& name);
std::string to_string(SolverKind kind);

inline constexpr double kDefaultOptTol = 1e-4;

struct BenchSpec {
  std::string problem_id;
  SolverKind solver = SolverKind::kNmbdca;
  int trials = 100;
  std::uint64_t seed = 0;
  SolverConfig config;
  /// Overrides the card's lambda_{-1}; the card value is used otherwise.
  std::optional<double> lambda_init;
  /// omega of the subgradient method's nu_k = omega |s|^2 / (k+1)^2.
  double subgrad_omega = 0.01;
  double opt_tol = kDefaultOptTol;
  /// Fixed start for run_single; seeded trial 0 otherwise.
  std::optional<Point> x0;

  void validate() const;
};

struct RunStats {
  int trials = 0;
  double min_k = 0.0, max_k = 0.0, med_k = 0.0;
  double min_time = 0.0, max_time = 0.0, med_time = 0.0;
  double best_phi = 0.0;
  std::optional<double> pct_optimal;  ///< empty when the card has no known optimum
};

struct TrialOutcome {
  Point x0;
  int iterations = 0;
  double time_s = 0.0;
  double final_phi = 0.0;
  Termination termination = Termination::kMaxIters;
  std::vector<DescentViolation> violations;
};

struct BenchResult {
  std::string problem_id;
  std::string solver;
  RunStats stats;
  std::vector<TrialOutcome> trials;
  std::size_t violation_count() const;
};

/// Start for trial t: every coordinate is drawn uniformly from the init box
/// with std::mt19937_64 seeded by splitmix64(seed + (t + 1) * 0x9E3779B97F4A7C15)
/// and u = (draw >> 11) * 2^-53. Independent of the solver, so all solvers
/// sharing a seed see the same starts.
Point seeded_start(const Box& box, std::uint64_t seed, int trial);
std::vector<Point> seeded_starts(const Box& box, std::uint64_t seed, int trials);

/// The configuration a run of `spec` on `card` uses (lambda_{-1} resolved).
SolverConfig resolved_config(const ProblemCard& card, const BenchSpec& spec);

/// Runs one solver on a card. nm_subgrad minimizes phi with s = g_subgrad - h_subgrad.
Trace run_solver(const ProblemCard& card, SolverKind solver, const Point& x0, const SolverConfig& config,
                 double subgrad_omega = 0.01);

/// One run from spec.x0 (or trial 0's seeded start).
Trace run_single(const ProblemCard& card, const BenchSpec& spec);

RunStats aggregate(const std::vector<TrialOutcome>& trials, std::optional<double> phi_star, double opt_tol);

/// spec.trials seeded runs plus descent replay of each trace with the card's sigma.
BenchResult run_bench(const ProblemCard& card, const BenchSpec& spec);

void write_stats_csv_header(std::ostream& out);
void write_stats_csv_row(std::ostream& out, const BenchResult& result);
void write_stats_json(std::ostream& out, const std::vector<BenchResult>& results);

struct SweepRow {
  double sigma = 0.0;
  std::string solver;
  double med_k = 0.0;
  double med_time = 0.0;
};

/// For every sigma and every solver, run_bench on sigma_family(family, sigma)
/// with the shared seeded starts.
std::vector<SweepRow> run_sigma_sweep(const std::string& family, const std::vector<double>& sigmas, int trials,
                                      std::uint64_t seed, const SolverConfig& base_config,
                                      const std::vector<SolverKind>& solvers = {SolverKind::kDca,
                                                                                SolverKind::kNmbdca,
                                                                                SolverKind::kPpmdc});

inline constexpr const char* kSweepCsvHeader = "sigma,solver,med_k,med_time_s";
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace dcboost
