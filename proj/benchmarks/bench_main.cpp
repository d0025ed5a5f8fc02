#include <benchmark/benchmark.h>

#include "essentia/detection.hpp"
#include "essentia/driver.hpp"
#include "essentia/exact_solver.hpp"
#include "essentia/generators.hpp"
#include "essentia/lp.hpp"
#include "essentia/obstacles.hpp"

using namespace essentia;

static void BM_PinnedLpStar(benchmark::State& state) {
  Instance inst = gen_star_multicut(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    LpProblem lp{inst, 0, {}};
    benchmark::DoNotOptimize(solve(lp).value);
  }
}
BENCHMARK(BM_PinnedLpStar)->Arg(5)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

static void BM_PinnedLpMatchingApex(benchmark::State& state) {
  Instance inst = gen_matching_apex(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    LpProblem lp{inst, 0, {}};
    benchmark::DoNotOptimize(solve(lp).value);
  }
}
BENCHMARK(BM_PinnedLpMatchingApex)->Arg(5)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

static void BM_StandardLpGnp(benchmark::State& state) {
  Instance inst = gen_gnp(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    LpProblem lp{inst, std::nullopt, {}};
    benchmark::DoNotOptimize(solve(lp).value);
  }
}
BENCHMARK(BM_StandardLpGnp)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_Oracle(benchmark::State& state) {
  const auto problem = static_cast<Problem>(state.range(0));
  Instance inst = gen_random({problem, 12, Rational(1, 2), 4}, 3);
  VertexWeights w(12);
  for (int u = 0; u < 12; ++u) w.set(u, make_rational(u % 3, 7));
  for (auto _ : state) benchmark::DoNotOptimize(find_violated_obstacle(inst, w));
  state.SetLabel(std::string(problem_tag(problem)));
}
BENCHMARK(BM_Oracle)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

static void BM_Detect(benchmark::State& state) {
  const auto problem = static_cast<Problem>(state.range(0));
  Instance inst = gen_random({problem, 10, Rational(2, 5), 4}, 5);
  const int opt = opt_value(inst);
  for (auto _ : state) benchmark::DoNotOptimize(detect({inst, opt}).selected);
  state.SetLabel(std::string(problem_tag(problem)));
}
BENCHMARK(BM_Detect)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_ExactSolver(benchmark::State& state) {
  const auto problem = static_cast<Problem>(state.range(0));
  Instance inst = gen_random({problem, 14, Rational(2, 5), 5}, 7);
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(inst));
  state.SetLabel(std::string(problem_tag(problem)));
}
BENCHMARK(BM_ExactSolver)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_Driver(benchmark::State& state) {
  Instance inst = gen_random_singleton({Problem::CographDeletion, 10}, 11).instance;
  for (auto _ : state) benchmark::DoNotOptimize(solve_with_detection(inst).solution);
}
BENCHMARK(BM_Driver)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
