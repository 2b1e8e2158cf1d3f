#include <benchmark/benchmark.h>

#include "mrta/matching.hpp"
#include "splitmix.hpp"

using namespace mrta;

namespace {

matching::BipartiteDemandGraph random_demand_graph(int tasks, int robots, std::uint64_t seed) {
  detail::SplitMix64 rng(seed);
  matching::BipartiteDemandGraph g;
  g.robot_count = robots;
  int total = 0;
  for (int j = 0; j < tasks; ++j) {
    const int d = static_cast<int>(rng.in_range(1, 3));
    if (total + d > robots) {
      g.demands.push_back(0);
    } else {
      g.demands.push_back(d);
      total += d;
    }
  }
  g.edge_cost.assign(static_cast<std::size_t>(tasks),
                     std::vector<Cost>(static_cast<std::size_t>(robots)));
  for (auto& row : g.edge_cost) {
    for (Cost& c : row) c = rng.in_range(0, 1000);
  }
  return g;
}

matching::GeneralWeightedGraph random_dense_graph(int vertices, std::uint64_t seed) {
  detail::SplitMix64 rng(seed);
  matching::GeneralWeightedGraph g(vertices);
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) g.add_edge(u, v, rng.in_range(0, 1000));
  }
  return g;
}

}  // namespace

static void BM_MinCostBMatching(benchmark::State& state) {
  const auto g = random_demand_graph(static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(1)), 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(matching::min_cost_b_matching(g));
  }
}
BENCHMARK(BM_MinCostBMatching)->Args({4, 12})->Args({8, 24})->Args({16, 48});

static void BM_BMatchingFeasible(benchmark::State& state) {
  const auto g = random_demand_graph(static_cast<int>(state.range(0)),
                                     static_cast<int>(state.range(1)), 71);
  for (auto _ : state) {
    benchmark::DoNotOptimize(matching::b_matching_feasible(g));
  }
}
BENCHMARK(BM_BMatchingFeasible)->Args({8, 24})->Args({16, 48});

static void BM_BlossomPerfectMatching(benchmark::State& state) {
  const auto g = random_dense_graph(static_cast<int>(state.range(0)), 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(matching::min_weight_perfect_matching(g));
  }
}
BENCHMARK(BM_BlossomPerfectMatching)->Arg(10)->Arg(20)->Arg(40)->Arg(80);

BENCHMARK_MAIN();
