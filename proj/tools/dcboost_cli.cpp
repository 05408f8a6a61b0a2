#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dcboost/bench.hpp"
#include "dcboost/errors.hpp"
#include "dcboost/problems.hpp"
#include "dcboost/trace_io.hpp"

namespace {

using namespace dcboost;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

// Every flag is optional so that a config file can fill the gaps; the
// precedence is flag > config file > built-in default.
struct Options {
  std::optional<std::string> config;
  std::optional<std::string> problem;
  std::optional<std::string> solver;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<double> lambda_init;
  std::optional<double> rho;
  std::optional<double> zeta;
  std::optional<double> omega;
  std::optional<std::string> nu_strategy;
  std::optional<double> nu_param;
  std::optional<std::string> trial_step;
  std::optional<int> max_iters;
  std::optional<double> opt_tol;
  std::optional<std::string> out;
  std::optional<std::string> x0;
  std::optional<std::string> family;
  std::optional<std::string> sigmas;
};

template <class T>
void fill(std::optional<T>& slot, const json& cfg, const char* key) {
  if (slot || !cfg.contains(key)) return;
  slot = cfg.at(key).get<T>();
}

void fill_csv(std::optional<std::string>& slot, const json& cfg, const char* key) {
  if (slot || !cfg.contains(key)) return;
  const json& v = cfg.at(key);
  if (v.is_string()) {
    slot = v.get<std::string>();
    return;
  }
  std::ostringstream s;
  s.precision(17);
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i].get<double>();
  slot = s.str();
}

void merge_config_file(Options& o) {
  if (!o.config) return;
  std::ifstream in(*o.config);
  if (!in) throw ConfigError("cannot open config file '" + *o.config + "'");
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("config file '" + *o.config + "': " + e.what());
  }
  if (!cfg.is_object()) throw ConfigError("config file must hold a flat JSON object");
  static const std::vector<std::string> known{"problem",  "solver",   "trials",     "seed",   "lambda_init",
                                              "rho",      "zeta",     "omega",      "nu_strategy", "nu_param",
                                              "trial_step", "max_iters", "opt_tol", "out",    "x0",
                                              "family",   "sigmas"};
  for (const auto& [key, _] : cfg.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ConfigError("config file: unknown key '" + key + "'");
  }
  try {
    fill(o.problem, cfg, "problem");
    fill(o.solver, cfg, "solver");
    fill(o.trials, cfg, "trials");
    fill(o.seed, cfg, "seed");
    fill(o.lambda_init, cfg, "lambda_init");
    fill(o.rho, cfg, "rho");
    fill(o.zeta, cfg, "zeta");
    fill(o.omega, cfg, "omega");
    fill(o.nu_strategy, cfg, "nu_strategy");
    fill(o.nu_param, cfg, "nu_param");
    fill(o.trial_step, cfg, "trial_step");
    fill(o.max_iters, cfg, "max_iters");
    fill(o.opt_tol, cfg, "opt_tol");
    fill(o.out, cfg, "out");
    fill_csv(o.x0, cfg, "x0");
    fill(o.family, cfg, "family");
    fill_csv(o.sigmas, cfg, "sigmas");
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config file: ") + e.what());
  }
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw ConfigError(std::string("bad number '") + cell + "' in " + what);
    }
  }
  if (v.empty()) throw ConfigError(std::string(what) + " is empty");
  return v;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("DCBOOST_SEED");
  if (!env || !*env) return 0;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw ConfigError(std::string("DCBOOST_SEED is not an unsigned integer: '") + env + "'");
  }
}

double default_nu_param(const std::string& name, const Options& o) {
  if (o.nu_param) return *o.nu_param;
  if (name == "power" || name == "log") return o.omega.value_or(0.01);
  if (name == "zhang_hager" || name == "geometric") return 0.5;
  if (name == "grippo") return 5.0;
  return 1.0;
}

BenchSpec build_spec(const Options& o, const std::string& solver_name) {
  BenchSpec spec;
  spec.problem_id = o.problem.value_or("");
  spec.solver = parse_solver(solver_name);
  spec.trials = o.trials.value_or(100);
  spec.seed = o.seed ? *o.seed : default_seed();
  spec.lambda_init = o.lambda_init;
  spec.opt_tol = o.opt_tol.value_or(kDefaultOptTol);
  spec.subgrad_omega = o.omega.value_or(0.01);
  SolverConfig& c = spec.config;
  c.rho = o.rho.value_or(c.rho);
  c.zeta = o.zeta.value_or(c.zeta);
  c.max_outer_iters = o.max_iters.value_or(c.max_outer_iters);
  const std::string nu_name = o.nu_strategy.value_or("power");
  c.nu = make_nu_strategy(nu_name, default_nu_param(nu_name, o));
  const std::string ts = o.trial_step.value_or("reset");
  if (ts == "reset") {
    c.trial_step = TrialStep::kReset;
  } else if (ts == "carry") {
    c.trial_step = TrialStep::kCarry;
  } else {
    throw ConfigError("--trial-step must be reset or carry");
  }
  if (o.x0) {
    const auto v = parse_list(*o.x0, "--x0");
    spec.x0 = Eigen::Map<const Point>(v.data(), static_cast<Eigen::Index>(v.size()));
  }
  spec.validate();
  return spec;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  return f;
}

int cmd_list() {
  std::cout.precision(17);
  std::cout << "id,dim,sigma,lambda_init,phi_star,convexity_verified,notes\n";
  for (const auto& c : catalog()) {
    std::cout << c.id << ',' << c.problem.dim << ',' << c.problem.sigma << ',' << c.default_lambda_init << ',';
    if (c.problem.optimum) std::cout << c.problem.optimum->value;
    std::cout << ',' << (c.convexity_verified ? "yes" : "no") << ",\"" << c.notes << "\"\n";
  }
  return kExitOk;
}

int cmd_run(const Options& o) {
  if (!o.problem) throw ConfigError("run: --problem is required");
  const ProblemCard& card = find_card(*o.problem);
  const BenchSpec spec = build_spec(o, o.solver.value_or("nmbdca"));
  const Trace trace = run_single(card, spec);
  std::optional<double> phi_star;
  if (card.problem.optimum) phi_star = card.problem.optimum->value;

  if (o.out) {
    auto csv = open_out(*o.out);
    write_trace_csv(csv, trace, phi_star);
    auto side = open_out(*o.out + ".json");
    write_trace_json(side, trace);
  } else {
    write_trace_csv(std::cout, trace, phi_star);
  }

  const auto violations = check_descent(trace, card.problem.sigma, resolved_config(card, spec).rho);
  std::cerr.precision(17);
  std::cerr << trace.solver << " on " << card.id << ": " << trace.iterations() << " iterations, phi = "
            << trace.final_phi << ", termination " << to_string(trace.termination) << '\n';
  for (const auto& v : violations)
    std::cerr << "descent violation (" << v.rule << ") at k=" << v.k << ": " << v.lhs << " > " << v.rhs << '\n';
  return violations.empty() ? kExitOk : kExitInvariant;
}

std::vector<std::string> expand(const std::optional<std::string>& value, const std::vector<std::string>& all,
                                 const std::string& fallback) {
  const std::string v = value.value_or(fallback);
  if (v == "all") return all;
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

int cmd_bench(const Options& o) {
  if (!o.problem) throw ConfigError("bench: --problem is required (an id, a comma list or 'all')");
  const auto problems = expand(o.problem, {"p6_1", "p6_2", "p6_3", "p6_4", "p6_5", "p6_6", "p6_7"}, "");
  const auto solvers = expand(o.solver, {"dca", "nmbdca", "ppmdc"}, "nmbdca");

  std::vector<BenchResult> results;
  std::ostringstream csv;
  write_stats_csv_header(csv);
  for (const auto& pid : problems) {
    const ProblemCard& card = find_card(pid);
    for (const auto& sname : solvers) {
      BenchSpec spec = build_spec(o, sname);
      spec.problem_id = pid;
      results.push_back(run_bench(card, spec));
      write_stats_csv_row(csv, results.back());
    }
  }
  if (o.out) {
    auto f = open_out(*o.out);
    f << csv.str();
    auto side = open_out(*o.out + ".json");
    write_stats_json(side, results);
  } else {
    std::cout << csv.str();
  }

  std::size_t violations = 0;
  for (const auto& r : results) violations += r.violation_count();
  if (violations > 0) {
    std::cerr << violations << " descent violation(s) detected\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_sweep(const Options& o) {
  const std::string family = o.family.value_or("p6_2");
  const auto sigmas = parse_list(o.sigmas.value_or("1,5,10,20"), "--sigmas");
  const BenchSpec base = build_spec(o, "dca");
  std::vector<SolverKind> kinds;
  for (const auto& s : expand(o.solver, {"dca", "nmbdca", "ppmdc"}, "all")) kinds.push_back(parse_solver(s));
  const auto rows = run_sigma_sweep(family, sigmas, base.trials, base.seed, base.config, kinds);
  if (o.out) {
    auto f = open_out(*o.out);
    write_sweep_csv(f, rows);
  } else {
    write_sweep_csv(std::cout, rows);
  }
  return kExitOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "flat JSON file whose keys mirror the long flags (dashes -> underscores)");
  sub->add_option("--problem", o.problem, "card id (see `dcboost list`)");
  sub->add_option("--solver", o.solver, "dca, bdca, nmbdca, ppmdc or nm_subgrad");
  sub->add_option("--trials", o.trials, "number of seeded trials (default 100)");
  sub->add_option("--seed", o.seed, "base seed (default: $DCBOOST_SEED or 0)");
  sub->add_option("--lambda-init", o.lambda_init, "initial trial step (default: the card's value)");
  sub->add_option("--rho", o.rho, "line-search decrease factor (default 0.5)");
  sub->add_option("--zeta", o.zeta, "backtracking factor in (0,1) (default 0.5)");
  sub->add_option("--omega", o.omega, "omega of the power/log rules and of nm_subgrad (default 0.01)");
  sub->add_option("--nu-strategy", o.nu_strategy, "zero, summable, zhang_hager, geometric, power, log, grippo");
  sub->add_option("--nu-param", o.nu_param, "eta, delta, M or nu0 of the chosen rule");
  sub->add_option("--trial-step", o.trial_step, "reset (default) or carry");
  sub->add_option("--max-iters", o.max_iters, "outer iteration cap (default 5000)");
  sub->add_option("--opt-tol", o.opt_tol, "|phi - phi*| threshold for % optimal (default 1e-4)");
  sub->add_option("--out", o.out, "output CSV path; a .json sidecar is written next to it");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dcboost: DC programming solvers and benchmark harness"};
  app.require_subcommand(1);
  Options o;

  app.add_subcommand("list", "list the problem cards");
  auto* run = app.add_subcommand("run", "one run with a per-iteration trace CSV");
  add_common(run, o);
  run->add_option("--x0", o.x0, "comma-separated start (default: seeded trial 0)");
  auto* bench = app.add_subcommand("bench", "seeded multi-trial statistics");
  add_common(bench, o);
  auto* sweep = app.add_subcommand("sweep", "median iterations over a sigma re-decomposition family");
  add_common(sweep, o);
  sweep->add_option("--family", o.family, "p6_1 or p6_2 (default p6_2)");
  sweep->add_option("--sigmas", o.sigmas, "comma-separated sigma values (default 1,5,10,20)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    merge_config_file(o);
    if (app.got_subcommand("list")) return cmd_list();
    if (app.got_subcommand("run")) return cmd_run(o);
    if (app.got_subcommand("bench")) return cmd_bench(o);
    return cmd_sweep(o);
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
