#include <benchmark/benchmark.h>

#include "mrta/approx.hpp"
#include "mrta/exact.hpp"
#include "mrta/instances.hpp"
#include "mrta/polycases.hpp"

using namespace mrta;

namespace {

Instance random_instance(int n, int m, int q_max, bool symmetric, std::uint64_t seed) {
  instances::GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.robot_count = n;
  cfg.task_count = m;
  cfg.cost_hi = 100;
  cfg.max_requirement = q_max;
  cfg.symmetric = symmetric;
  return instances::gen_random(cfg);
}

}  // namespace

static void BM_BruteForce(benchmark::State& state) {
  const Instance inst =
      random_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 3,
                      false, 37);
  const Budget budget{BudgetKind::Total, 150};
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact::brute_force(inst, budget));
  }
}
BENCHMARK(BM_BruteForce)->Args({6, 4})->Args({8, 5});

static void BM_ExactTotal(benchmark::State& state) {
  const Instance inst = random_instance(20, static_cast<int>(state.range(0)), 3, false, 41);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact::exact_total_budget(inst, 300));
  }
}
BENCHMARK(BM_ExactTotal)->Arg(6)->Arg(10)->Arg(14);

static void BM_GreedyTotal(benchmark::State& state) {
  const Instance inst =
      random_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 3,
                      false, 43);
  for (auto _ : state) {
    benchmark::DoNotOptimize(approx::greedy_total(inst, 500));
  }
}
BENCHMARK(BM_GreedyTotal)->Args({50, 20})->Args({200, 50})->Args({500, 100});

static void BM_SolveQ2(benchmark::State& state) {
  const Instance inst =
      random_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2,
                      false, 47);
  const Budget budget{BudgetKind::Total, 400};
  for (auto _ : state) {
    benchmark::DoNotOptimize(polycases::solve_q2(inst, budget));
  }
}
BENCHMARK(BM_SolveQ2)->Args({10, 6})->Args({20, 12})->Args({40, 20});

static void BM_PtasSymmetric(benchmark::State& state) {
  const Instance inst = random_instance(30, static_cast<int>(state.range(0)), 3, true, 53);
  const approx::Fraction eps{1, static_cast<int>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(approx::ptas_symmetric_total(inst, 400, eps));
  }
}
BENCHMARK(BM_PtasSymmetric)->Args({10, 2})->Args({14, 3});

static void BM_SetPacking(benchmark::State& state) {
  const Instance inst =
      random_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2,
                      false, 59);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        approx::set_packing_local_search(inst, BudgetKind::PerRobot, 60));
  }
}
BENCHMARK(BM_SetPacking)->Args({10, 5})->Args({14, 7});
