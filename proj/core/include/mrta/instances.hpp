#ifndef MRTA_INSTANCES_HPP
#define MRTA_INSTANCES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mrta/core.hpp"

namespace mrta::instances {

struct GeneratorConfig {
  std::uint64_t seed = 0;
  int robot_count = 0;
  int task_count = 0;
  Cost cost_lo = 0;
  Cost cost_hi = 9;
  int max_requirement = 1;  // q_j drawn from [1, max_requirement]

  bool symmetric = false;
  bool uniform = false;

  struct Location {
    std::int64_t box = 10;  // points drawn from [0, box]^2
    std::int64_t scale = 1;
  };
  std::optional<Location> location;
};

// Deterministic in (seed, config); identical configs give identical bytes.
Instance gen_random(const GeneratorConfig& cfg);

// gen_random restricted to configs with the location flag.
Instance gen_location_based(const GeneratorConfig& cfg);

struct TwoKPInstance {
  struct Item {
    std::int64_t size1 = 0;  // robot dimension
    std::int64_t size2 = 0;  // cost dimension
  };
  std::vector<Item> items;   // unit profits implied
  std::int64_t capacity1 = 0;
  std::int64_t capacity2 = 0;
};

// Symmetric total-budget instance <-> two-dimensional unit-profit knapsack.
// from_2kp scales the cost dimension by lcm(size1) when size2/size1 is not
// integral, and rejects items with size1 = 0 (no task may require 0 robots).
TwoKPInstance to_2kp(const Instance& inst, Cost total_budget);
std::pair<Instance, Cost> from_2kp(const TwoKPInstance& kp);

struct GeneratedProblem {
  Instance instance;
  Budget budget;
};

struct ISReduction {
  Instance instance;
  Budget budget;
  std::vector<int> task_of_vertex;  // graph vertex -> task index
};

// Graph G -> instance whose total-budget-0 optimum equals the independence
// number: one requirement-|V| task per vertex, per-vertex robot groups with
// zero cost at home, and merged robots along edges.
ISReduction gen_from_independent_set(int vertex_count,
                                     const std::vector<std::pair<int, int>>& edges);

// 3k positive integers -> k tasks of requirement 3, row-constant costs, and
// per-task budget sum(S)/k; all tasks are handleable iff S has a 3-partition.
GeneratedProblem gen_from_3partition(const std::vector<std::int64_t>& numbers, int k);

// Bipartite adjacency -> uniform q=3 instance with costs in {1, 3m+1} and
// the budget (3m / 3 / 1) matching the requested kind.
GeneratedProblem gen_bitcost(const std::vector<std::vector<bool>>& adjacency, BudgetKind kind);

}  // namespace mrta::instances

#endif  // MRTA_INSTANCES_HPP
