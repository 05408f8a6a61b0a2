#include "dcboost/bench.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include <nlohmann/json.hpp>

#include "dcboost/errors.hpp"

namespace dcboost {

SolverKind parse_solver(const std::string& name) {
  if (name == "dca") return SolverKind::kDca;
  if (name == "bdca") return SolverKind::kBdca;
  if (name == "nmbdca") return SolverKind::kNmbdca;
  if (name == "ppmdc") return SolverKind::kPpmdc;
  if (name == "nm_subgrad") return SolverKind::kNmSubgrad;
  throw ConfigError("unknown solver '" + name + "' (expected dca, bdca, nmbdca, ppmdc or nm_subgrad)");
}

std::string to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::kDca: return "dca";
    case SolverKind::kBdca: return "bdca";
    case SolverKind::kNmbdca: return "nmbdca";
    case SolverKind::kPpmdc: return "ppmdc";
    case SolverKind::kNmSubgrad: return "nm_subgrad";
  }
  return "unknown";
}

void BenchSpec::validate() const {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (lambda_init && !(*lambda_init > 0.0)) throw ConfigError("lambda_init must be > 0");
  if (!(opt_tol > 0.0)) throw ConfigError("opt_tol must be > 0");
  if (!(subgrad_omega > 0.0)) throw ConfigError("omega must be > 0");
  config.validate();
}

std::size_t BenchResult::violation_count() const {
  std::size_t n = 0;
  for (const auto& t : trials) n += t.violations.size();
  return n;
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

Point seeded_start(const Box& box, std::uint64_t seed, int trial) {
  std::mt19937_64 gen(splitmix64(seed + static_cast<std::uint64_t>(trial + 1) * 0x9E3779B97F4A7C15ULL));
  Point x(box.lower.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    x(i) = box.lower(i) + u * (box.upper(i) - box.lower(i));
  }
  return x;
}

std::vector<Point> seeded_starts(const Box& box, std::uint64_t seed, int trials) {
  std::vector<Point> xs;
  xs.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) xs.push_back(seeded_start(box, seed, t));
  return xs;
}

SolverConfig resolved_config(const ProblemCard& card, const BenchSpec& spec) {
  SolverConfig c = spec.config;
  c.lambda_init = spec.lambda_init.value_or(card.default_lambda_init);
  return c;
}

Trace run_solver(const ProblemCard& card, SolverKind solver, const Point& x0, const SolverConfig& config,
                 double subgrad_omega) {
  const DcProblem& p = card.problem;
  switch (solver) {
    case SolverKind::kDca: return dca(p, x0, config);
    case SolverKind::kBdca: return bdca_monotone(p, x0, config);
    case SolverKind::kNmbdca: return nmbdca(p, x0, config);
    case SolverKind::kPpmdc: return ppmdc(p, x0, config, config.ppmdc_alpha);
    case SolverKind::kNmSubgrad: {
      if (!p.g_subgrad) throw ConfigError("nm_subgrad: card '" + card.id + "' has no g subgradient");
      if (x0.size() != p.dim) throw ConfigError("initial point has the wrong dimension");
      const ScalarOracle f = [&p](const Point& x) { return eval_phi(p, x); };
      const VectorOracle s = [&p](const Point& x) -> Point { return (*p.g_subgrad)(x) - subgrad_h(p, x); };
      Trace t = nm_subgradient(f, s, x0, config, subgrad_nu_inverse_square(subgrad_omega));
      t.problem = p.name;
      return t;
    }
  }
  throw ConfigError("unknown solver");
}

Trace run_single(const ProblemCard& card, const BenchSpec& spec) {
  spec.validate();
  const Point x0 = spec.x0.value_or(seeded_start(card.problem.init_box, spec.seed, 0));
  return run_solver(card, spec.solver, x0, resolved_config(card, spec), spec.subgrad_omega);
}

RunStats aggregate(const std::vector<TrialOutcome>& trials, std::optional<double> phi_star, double opt_tol) {
  if (trials.empty()) throw ConfigError("aggregate: no trials");
  std::vector<double> ks, ts;
  RunStats s;
  s.trials = static_cast<int>(trials.size());
  s.best_phi = trials.front().final_phi;
  int hits = 0;
  for (const auto& t : trials) {
    ks.push_back(t.iterations);
    ts.push_back(t.time_s);
    s.best_phi = std::min(s.best_phi, t.final_phi);
    if (phi_star && std::abs(t.final_phi - *phi_star) <= opt_tol) ++hits;
  }
  s.min_k = *std::min_element(ks.begin(), ks.end());
  s.max_k = *std::max_element(ks.begin(), ks.end());
  s.med_k = median(ks);
  s.min_time = *std::min_element(ts.begin(), ts.end());
  s.max_time = *std::max_element(ts.begin(), ts.end());
  s.med_time = median(ts);
  if (phi_star) s.pct_optimal = 100.0 * hits / static_cast<double>(trials.size());
  return s;
}

BenchResult run_bench(const ProblemCard& card, const BenchSpec& spec) {
  spec.validate();
  const SolverConfig config = resolved_config(card, spec);
  BenchResult r;
  r.problem_id = card.id;
  r.solver = to_string(spec.solver);
  for (const Point& x0 : seeded_starts(card.problem.init_box, spec.seed, spec.trials)) {
    const Trace trace = run_solver(card, spec.solver, x0, config, spec.subgrad_omega);
    TrialOutcome o;
    o.x0 = x0;
    o.iterations = trace.iterations();
    o.time_s = trace.wall_time();
    o.final_phi = trace.final_phi;
    o.termination = trace.termination;
    o.violations = check_descent(trace, card.problem.sigma, config.rho);
    r.trials.push_back(std::move(o));
  }
  std::optional<double> phi_star;
  if (card.problem.optimum) phi_star = card.problem.optimum->value;
  r.stats = aggregate(r.trials, phi_star, spec.opt_tol);
  return r;
}

void write_stats_csv_header(std::ostream& out) {
  out << "problem,solver,trials,min_k,max_k,med_k,min_time_s,max_time_s,med_time_s,best_phi,pct_optimal,"
         "violations\n";
}

void write_stats_csv_row(std::ostream& out, const BenchResult& r) {
  const auto old = out.precision(17);
  const RunStats& s = r.stats;
  out << r.problem_id << ',' << r.solver << ',' << s.trials << ',' << s.min_k << ',' << s.max_k << ',' << s.med_k
      << ',' << s.min_time << ',' << s.max_time << ',' << s.med_time << ',' << s.best_phi << ',';
  if (s.pct_optimal) {
    out << *s.pct_optimal;
  } else {
    out << "n/a";
  }
  out << ',' << r.violation_count() << '\n';
  out.precision(old);
}

void write_stats_json(std::ostream& out, const std::vector<BenchResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    const RunStats& s = r.stats;
    nlohmann::json j{{"problem", r.problem_id},
                     {"solver", r.solver},
                     {"trials", s.trials},
                     {"min_k", s.min_k},
                     {"max_k", s.max_k},
                     {"med_k", s.med_k},
                     {"min_time_s", s.min_time},
                     {"max_time_s", s.max_time},
                     {"med_time_s", s.med_time},
                     {"best_phi", s.best_phi},
                     {"violations", r.violation_count()}};
    if (s.pct_optimal) {
      j["pct_optimal"] = *s.pct_optimal;
    } else {
      j["pct_optimal"] = "n/a";
    }
    arr.push_back(std::move(j));
  }
  out << arr.dump(1) << '\n';
}

std::vector<SweepRow> run_sigma_sweep(const std::string& family, const std::vector<double>& sigmas, int trials,
                                      std::uint64_t seed, const SolverConfig& base_config,
                                      const std::vector<SolverKind>& solvers) {
  if (sigmas.empty()) throw ConfigError("sigma sweep: empty sigma list");
  std::vector<ProblemCard> cards;
  for (double s : sigmas) cards.push_back(sigma_family(family, s));
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    for (SolverKind kind : solvers) {
      BenchSpec spec;
      spec.problem_id = cards[i].id;
      spec.solver = kind;
      spec.trials = trials;
      spec.seed = seed;
      spec.config = base_config;
      const BenchResult r = run_bench(cards[i], spec);
      rows.push_back({sigmas[i], to_string(kind), r.stats.med_k, r.stats.med_time});
    }
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  const auto old = out.precision(17);
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) out << r.sigma << ',' << r.solver << ',' << r.med_k << ',' << r.med_time << '\n';
  out.precision(old);
}

}  // namespace dcboost
