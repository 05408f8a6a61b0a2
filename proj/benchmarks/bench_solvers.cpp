#include <benchmark/benchmark.h>

#include <cmath>

#include "dcboost/bench.hpp"
#include "dcboost/inner_solver.hpp"
#include "dcboost/problems.hpp"
#include "dcboost/solvers.hpp"

namespace {

using namespace dcboost;

void BM_NelderMeadSubproblem(benchmark::State& state) {
  const ProblemCard& card = find_card("p6_2");
  const Point x = seeded_start(card.problem.init_box, 0, 0);
  const ScalarOracle psi = build_dca_subproblem(card.problem, x, subgrad_h(card.problem, x));
  for (auto _ : state) benchmark::DoNotOptimize(nelder_mead(psi, x));
}
BENCHMARK(BM_NelderMeadSubproblem);

void BM_LineSearch(benchmark::State& state) {
  const DcProblem& p = find_card("p6_2").problem;
  const ScalarOracle phi = [&](const Point& x) { return eval_phi(p, x); };
  Point y(2), d(2);
  y << 1.0, 0.0;
  d << 0.5, -1.0;
  for (auto _ : state) benchmark::DoNotOptimize(line_search(phi, y, d, 1.0, 0.1, 0.5, 0.0125, 60));
}
BENCHMARK(BM_LineSearch);

void BM_Solver(benchmark::State& state, const char* id, SolverKind kind) {
  const ProblemCard& card = find_card(id);
  SolverConfig c;
  c.lambda_init = card.default_lambda_init;
  int trial = 0;
  for (auto _ : state) {
    const Trace t = run_solver(card, kind, seeded_start(card.problem.init_box, 0, trial++ % 100), c);
    benchmark::DoNotOptimize(t.final_phi);
  }
}
BENCHMARK_CAPTURE(BM_Solver, p6_2_dca, "p6_2", SolverKind::kDca);
BENCHMARK_CAPTURE(BM_Solver, p6_2_nmbdca, "p6_2", SolverKind::kNmbdca);
BENCHMARK_CAPTURE(BM_Solver, p6_2_ppmdc, "p6_2", SolverKind::kPpmdc);
BENCHMARK_CAPTURE(BM_Solver, p6_5_nmbdca, "p6_5", SolverKind::kNmbdca);

}  // namespace

BENCHMARK_MAIN();
