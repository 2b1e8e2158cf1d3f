#ifndef MRTA_MATCHING_HPP
#define MRTA_MATCHING_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mrta/core.hpp"

namespace mrta::matching {

// Tasks on the left with integer demands, robots on the right with unit
// capacity. edge_cost[t][r] is kNoEdge for forbidden pairs, otherwise >= 0.
struct BipartiteDemandGraph {
  static constexpr Cost kNoEdge = -1;

  std::vector<int> demands;
  int robot_count = 0;
  std::vector<std::vector<Cost>> edge_cost;  // [task][robot]

  int task_count() const { return static_cast<int>(demands.size()); }

  static BipartiteDemandGraph complete(const std::vector<int>& demands,
                                       const std::vector<std::vector<Cost>>& cost_by_task_robot);
};

struct BMatching {
  std::vector<std::pair<int, int>> edges;  // (robot, task)
  Cost cost = 0;
};

// Minimum-cost matching saturating every demand exactly, each robot used at
// most once. Successive shortest augmenting paths with vertex potentials;
// nullopt when some demand cannot be saturated.
std::optional<BMatching> min_cost_b_matching(const BipartiteDemandGraph& g);

// True iff a demand-saturating matching exists (max-flow check, no costs).
bool b_matching_feasible(const BipartiteDemandGraph& g);

// Undirected weighted graph. Weights may be negative. Self-loops are
// rejected; parallel edges collapse to the minimum weight.
class GeneralWeightedGraph {
 public:
  using Weight = std::int64_t;

  struct Edge {
    int u = 0, v = 0;
    Weight weight = 0;
  };

  explicit GeneralWeightedGraph(int vertex_count);

  void add_edge(int u, int v, Weight w);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> edge_index_;  // [u] -> indices into edges_
};

struct PerfectMatching {
  std::vector<int> mate;  // mate[v] = matched partner
  GeneralWeightedGraph::Weight weight = 0;
};

// Minimum-weight perfect matching via the blossom algorithm (dense O(V^3)).
// nullopt when no perfect matching exists (including odd vertex count).
std::optional<PerfectMatching> min_weight_perfect_matching(const GeneralWeightedGraph& g);

}  // namespace mrta::matching

#endif  // MRTA_MATCHING_HPP
