#include "mrta/matching.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <queue>
#include <stdexcept>

namespace mrta::matching {

BipartiteDemandGraph BipartiteDemandGraph::complete(
    const std::vector<int>& demands, const std::vector<std::vector<Cost>>& cost_by_task_robot) {
  BipartiteDemandGraph g;
  g.demands = demands;
  g.edge_cost = cost_by_task_robot;
  g.robot_count = cost_by_task_robot.empty() ? 0 : static_cast<int>(cost_by_task_robot[0].size());
  return g;
}

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Unit-capacity-friendly min-cost max-flow: one Bellman-Ford pass to seed
// vertex potentials, then Dijkstra on reduced costs per augmentation.
class MinCostFlow {
 public:
  explicit MinCostFlow(int node_count) : graph_(node_count) {}

  void add_arc(int from, int to, std::int64_t cap, std::int64_t cost) {
    graph_[from].push_back({to, static_cast<int>(graph_[to].size()), cap, cost});
    graph_[to].push_back({from, static_cast<int>(graph_[from].size()) - 1, 0, -cost});
  }

  // Pushes at most `target` units from s to t; returns (flow, cost).
  std::pair<std::int64_t, std::int64_t> run(int s, int t, std::int64_t target) {
    const int n = static_cast<int>(graph_.size());
    std::vector<std::int64_t> potential(n, 0);

    // Bellman-Ford seeds the potentials; with nonnegative arc costs it
    // converges immediately but keeps the primitive valid for any input.
    {
      bool improved = true;
      int rounds = 0;
      while (improved && rounds++ <= n) {
        improved = false;
        for (int u = 0; u < n; ++u) {
          if (potential[u] >= kInf) continue;
          for (const Arc& a : graph_[u]) {
            if (a.cap > 0 && potential[u] + a.cost < potential[a.to]) {
              potential[a.to] = potential[u] + a.cost;
              improved = true;
            }
          }
        }
      }
      if (improved) throw std::logic_error("negative cycle in matching network");
    }

    std::int64_t flow = 0, cost = 0;
    std::vector<std::int64_t> dist(n);
    std::vector<int> prev_node(n), prev_arc(n);
    while (flow < target) {
      using Item = std::pair<std::int64_t, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
      dist.assign(n, kInf);
      dist[s] = 0;
      heap.push({0, s});
      while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        for (std::size_t idx = 0; idx < graph_[u].size(); ++idx) {
          const Arc& a = graph_[u][idx];
          if (a.cap <= 0) continue;
          const std::int64_t nd = d + a.cost + potential[u] - potential[a.to];
          if (nd < dist[a.to]) {
            dist[a.to] = nd;
            prev_node[a.to] = u;
            prev_arc[a.to] = static_cast<int>(idx);
            heap.push({nd, a.to});
          }
        }
      }
      if (dist[t] >= kInf) break;
      for (int u = 0; u < n; ++u) {
        if (dist[u] < kInf) potential[u] += dist[u];
      }
      std::int64_t push = target - flow;
      for (int u = t; u != s; u = prev_node[u]) {
        push = std::min(push, graph_[prev_node[u]][prev_arc[u]].cap);
      }
      for (int u = t; u != s; u = prev_node[u]) {
        Arc& a = graph_[prev_node[u]][prev_arc[u]];
        a.cap -= push;
        graph_[a.to][a.rev].cap += push;
        cost += push * a.cost;
      }
      flow += push;
    }

    // The flow is cost-optimal for its value iff the residual graph has no
    // negative cycle.
    {
      std::vector<std::int64_t> h(n, 0);
      for (int round = 0; round <= n; ++round) {
        bool improved = false;
        for (int u = 0; u < n; ++u) {
          for (const Arc& a : graph_[u]) {
            if (a.cap > 0 && h[u] + a.cost < h[a.to]) {
              h[a.to] = h[u] + a.cost;
              improved = true;
            }
          }
        }
        if (!improved) break;
        if (round == n) throw std::logic_error("min-cost flow left a negative residual cycle");
      }
    }
    return {flow, cost};
  }

  struct Arc {
    int to;
    int rev;
    std::int64_t cap;
    std::int64_t cost;
  };

  const std::vector<std::vector<Arc>>& graph() const { return graph_; }

 private:
  std::vector<std::vector<Arc>> graph_;
};

class Dinic {
 public:
  explicit Dinic(int node_count) : graph_(node_count) {}

  void add_arc(int from, int to, std::int64_t cap) {
    graph_[from].push_back({to, static_cast<int>(graph_[to].size()), cap});
    graph_[to].push_back({from, static_cast<int>(graph_[from].size()) - 1, 0});
  }

  std::int64_t max_flow(int s, int t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      iter_.assign(graph_.size(), 0);
      while (std::int64_t f = dfs(s, t, kInf)) flow += f;
    }
    return flow;
  }

 private:
  struct Arc {
    int to;
    int rev;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    level_.assign(graph_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Arc& a : graph_[u]) {
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[u] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(int u, int t, std::int64_t limit) {
    if (u == t) return limit;
    for (int& i = iter_[u]; i < static_cast<int>(graph_[u].size()); ++i) {
      Arc& a = graph_[u][i];
      if (a.cap <= 0 || level_[a.to] != level_[u] + 1) continue;
      const std::int64_t got = dfs(a.to, t, std::min(limit, a.cap));
      if (got > 0) {
        a.cap -= got;
        graph_[a.to][a.rev].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> graph_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

std::int64_t total_demand(const BipartiteDemandGraph& g) {
  std::int64_t d = 0;
  for (int dj : g.demands) {
    if (dj < 0) throw std::invalid_argument("negative demand");
    d += dj;
  }
  return d;
}

void check_graph(const BipartiteDemandGraph& g) {
  if (static_cast<int>(g.edge_cost.size()) != g.task_count()) {
    throw std::invalid_argument("edge cost matrix rows != demand count");
  }
  for (const auto& row : g.edge_cost) {
    if (static_cast<int>(row.size()) != g.robot_count) {
      throw std::invalid_argument("edge cost matrix cols != robot count");
    }
    for (Cost c : row) {
      if (c < 0 && c != BipartiteDemandGraph::kNoEdge) {
        throw std::invalid_argument("negative edge cost in demand graph");
      }
    }
  }
}

}  // namespace

std::optional<BMatching> min_cost_b_matching(const BipartiteDemandGraph& g) {
  check_graph(g);
  const int tasks = g.task_count();
  const int robots = g.robot_count;
  const std::int64_t need = total_demand(g);
  if (need > robots) return std::nullopt;

  // source 0, tasks 1..tasks, robots tasks+1..tasks+robots, sink last
  const int source = 0;
  const int sink = tasks + robots + 1;
  MinCostFlow mcf(sink + 1);
  for (int j = 0; j < tasks; ++j) {
    if (g.demands[j] > 0) mcf.add_arc(source, 1 + j, g.demands[j], 0);
  }
  for (int j = 0; j < tasks; ++j) {
    for (int i = 0; i < robots; ++i) {
      const Cost c = g.edge_cost[j][i];
      if (c == BipartiteDemandGraph::kNoEdge) continue;
      mcf.add_arc(1 + j, 1 + tasks + i, 1, c);
    }
  }
  for (int i = 0; i < robots; ++i) {
    mcf.add_arc(1 + tasks + i, sink, 1, 0);
  }

  auto [flow, cost] = mcf.run(source, sink, need);
  if (flow < need) return std::nullopt;

  BMatching result;
  result.cost = cost;
  for (int j = 0; j < tasks; ++j) {
    for (const auto& arc : mcf.graph()[1 + j]) {
      // A saturated forward arc into a robot node marks a matched pair.
      if (arc.to >= 1 + tasks && arc.to < sink && arc.cost >= 0 && arc.cap == 0) {
        result.edges.push_back({arc.to - 1 - tasks, j});
      }
    }
  }
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

bool b_matching_feasible(const BipartiteDemandGraph& g) {
  check_graph(g);
  const int tasks = g.task_count();
  const int robots = g.robot_count;
  const std::int64_t need = total_demand(g);
  if (need > robots) return false;

  const int source = 0;
  const int sink = tasks + robots + 1;
  Dinic dinic(sink + 1);
  for (int j = 0; j < tasks; ++j) {
    if (g.demands[j] > 0) dinic.add_arc(source, 1 + j, g.demands[j]);
  }
  for (int j = 0; j < tasks; ++j) {
    for (int i = 0; i < robots; ++i) {
      if (g.edge_cost[j][i] != BipartiteDemandGraph::kNoEdge) {
        dinic.add_arc(1 + j, 1 + tasks + i, 1);
      }
    }
  }
  for (int i = 0; i < robots; ++i) {
    dinic.add_arc(1 + tasks + i, sink, 1);
  }
  return dinic.max_flow(source, sink) == need;
}

GeneralWeightedGraph::GeneralWeightedGraph(int vertex_count)
    : vertex_count_(vertex_count), edge_index_(static_cast<std::size_t>(vertex_count)) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
}

void GeneralWeightedGraph::add_edge(int u, int v, Weight w) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if (u == v) throw std::invalid_argument("self-loop not allowed");
  for (int idx : edge_index_[u]) {
    Edge& e = edges_[idx];
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
      e.weight = std::min(e.weight, w);
      return;
    }
  }
  edges_.push_back({u, v, w});
  edge_index_[u].push_back(static_cast<int>(edges_.size()) - 1);
  edge_index_[v].push_back(static_cast<int>(edges_.size()) - 1);
}

namespace {

// Maximum-weight matching on a general graph (Galil's O(V^3) scheme with
// blossom shrinking and dual adjustment). Weights must be nonnegative
// integers; callers pre-scale so that maximum weight implies maximum
// cardinality. Works on doubled weights so every dual stays integral.
class MaxWeightMatcher {
 public:
  MaxWeightMatcher(int vertex_count, const std::vector<GeneralWeightedGraph::Edge>& edges)
      : nvertex_(vertex_count), edges_(edges) {
    nedge_ = static_cast<int>(edges_.size());
    max_weight_ = 0;
    for (const auto& e : edges_) max_weight_ = std::max(max_weight_, e.weight);

    endpoint_.resize(2 * nedge_);
    for (int p = 0; p < 2 * nedge_; ++p) {
      endpoint_[p] = (p % 2 == 0) ? edges_[p / 2].u : edges_[p / 2].v;
    }
    neighb_end_.assign(nvertex_, {});
    for (int k = 0; k < nedge_; ++k) {
      neighb_end_[edges_[k].u].push_back(2 * k + 1);
      neighb_end_[edges_[k].v].push_back(2 * k);
    }

    mate_.assign(nvertex_, -1);
    label_.assign(2 * nvertex_, 0);
    label_end_.assign(2 * nvertex_, -1);
    in_blossom_.resize(nvertex_);
    for (int v = 0; v < nvertex_; ++v) in_blossom_[v] = v;
    blossom_parent_.assign(2 * nvertex_, -1);
    blossom_childs_.assign(2 * nvertex_, {});
    blossom_base_.assign(2 * nvertex_, -1);
    for (int v = 0; v < nvertex_; ++v) blossom_base_[v] = v;
    blossom_endps_.assign(2 * nvertex_, {});
    best_edge_.assign(2 * nvertex_, -1);
    blossom_best_edges_.assign(2 * nvertex_, {});
    has_best_list_.assign(2 * nvertex_, false);
    for (int b = 2 * nvertex_ - 1; b >= nvertex_; --b) unused_blossoms_.push_back(b);
    dual_.assign(2 * nvertex_, 0);
    for (int v = 0; v < nvertex_; ++v) dual_[v] = max_weight_;
    allow_edge_.assign(nedge_, false);
  }

  // mate[v] = partner vertex or -1.
  std::vector<int> solve() {
    if (nvertex_ == 0) return {};
    for (int stage = 0; stage < nvertex_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(best_edge_.begin(), best_edge_.end(), -1);
      for (int b = nvertex_; b < 2 * nvertex_; ++b) {
        blossom_best_edges_[b].clear();
        has_best_list_[b] = false;
      }
      std::fill(allow_edge_.begin(), allow_edge_.end(), false);
      queue_.clear();
      for (int v = 0; v < nvertex_; ++v) {
        if (mate_[v] == -1 && label_[in_blossom_[v]] == 0) assign_label(v, 1, -1);
      }

      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          const int v = queue_.back();
          queue_.pop_back();
          for (int p : neighb_end_[v]) {
            const int k = p / 2;
            const int w = endpoint_[p];
            if (in_blossom_[v] == in_blossom_[w]) continue;
            std::int64_t kslack = 0;
            if (!allow_edge_[k]) {
              kslack = slack(k);
              if (kslack <= 0) allow_edge_[k] = true;
            }
            if (allow_edge_[k]) {
              if (label_[in_blossom_[w]] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[in_blossom_[w]] == 1) {
                const int base = scan_blossom(v, w);
                if (base >= 0) {
                  add_blossom(base, k);
                } else {
                  augment_matching(v, k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                label_[w] = 2;
                label_end_[w] = p ^ 1;
              }
            } else if (label_[in_blossom_[w]] == 1) {
              const int b = in_blossom_[v];
              if (best_edge_[b] == -1 || kslack < slack(best_edge_[b])) best_edge_[b] = k;
            } else if (label_[w] == 0) {
              if (best_edge_[w] == -1 || kslack < slack(best_edge_[w])) best_edge_[w] = k;
            }
          }
        }
        if (augmented) break;

        int delta_type = 1;
        std::int64_t delta = dual_[0];
        for (int v = 1; v < nvertex_; ++v) delta = std::min(delta, dual_[v]);
        int delta_edge = -1, delta_blossom = -1;

        for (int v = 0; v < nvertex_; ++v) {
          if (label_[in_blossom_[v]] == 0 && best_edge_[v] != -1) {
            const std::int64_t d = slack(best_edge_[v]);
            if (d < delta) {
              delta = d;
              delta_type = 2;
              delta_edge = best_edge_[v];
            }
          }
        }
        for (int b = 0; b < 2 * nvertex_; ++b) {
          if (blossom_parent_[b] == -1 && label_[b] == 1 && best_edge_[b] != -1) {
            const std::int64_t kslack = slack(best_edge_[b]);
            if (kslack % 2 != 0) throw std::logic_error("odd slack between S-blossoms");
            const std::int64_t d = kslack / 2;
            if (d < delta) {
              delta = d;
              delta_type = 3;
              delta_edge = best_edge_[b];
            }
          }
        }
        for (int b = nvertex_; b < 2 * nvertex_; ++b) {
          if (blossom_base_[b] >= 0 && blossom_parent_[b] == -1 && label_[b] == 2 &&
              dual_[b] < delta) {
            delta = dual_[b];
            delta_type = 4;
            delta_blossom = b;
          }
        }

        for (int v = 0; v < nvertex_; ++v) {
          if (label_[in_blossom_[v]] == 1) {
            dual_[v] -= delta;
          } else if (label_[in_blossom_[v]] == 2) {
            dual_[v] += delta;
          }
        }
        for (int b = nvertex_; b < 2 * nvertex_; ++b) {
          if (blossom_base_[b] >= 0 && blossom_parent_[b] == -1) {
            if (label_[b] == 1) {
              dual_[b] += delta;
            } else if (label_[b] == 2) {
              dual_[b] -= delta;
            }
          }
        }

        if (delta_type == 1) {
          break;
        } else if (delta_type == 2) {
          allow_edge_[delta_edge] = true;
          int i = edges_[delta_edge].u;
          if (label_[in_blossom_[i]] == 0) i = edges_[delta_edge].v;
          queue_.push_back(i);
        } else if (delta_type == 3) {
          allow_edge_[delta_edge] = true;
          queue_.push_back(edges_[delta_edge].u);
        } else {
          expand_blossom(delta_blossom, false);
        }
      }

      if (!augmented) break;

      for (int b = nvertex_; b < 2 * nvertex_; ++b) {
        if (blossom_parent_[b] == -1 && blossom_base_[b] >= 0 && label_[b] == 1 &&
            dual_[b] == 0) {
          expand_blossom(b, true);
        }
      }
    }

    std::vector<int> mate(nvertex_, -1);
    for (int v = 0; v < nvertex_; ++v) {
      if (mate_[v] >= 0) mate[v] = endpoint_[mate_[v]];
    }
    return mate;
  }

 private:
  std::int64_t slack(int k) const {
    return dual_[edges_[k].u] + dual_[edges_[k].v] - 2 * edges_[k].weight;
  }

  void collect_leaves(int b, std::vector<int>& out) const {
    if (b < nvertex_) {
      out.push_back(b);
      return;
    }
    for (int child : blossom_childs_[b]) collect_leaves(child, out);
  }

  void assign_label(int w, int t, int p) {
    const int b = in_blossom_[w];
    label_[w] = label_[b] = t;
    label_end_[w] = label_end_[b] = p;
    best_edge_[w] = best_edge_[b] = -1;
    if (t == 1) {
      collect_leaves(b, queue_);
    } else if (t == 2) {
      const int base = blossom_base_[b];
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  // Walks up from v and w towards the roots; returns the first common base
  // vertex or -1 when v and w sit in different trees.
  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = in_blossom_[v];
      if (label_[b] & 4) {
        base = blossom_base_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (label_end_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[label_end_[b]];
        b = in_blossom_[v];
        v = endpoint_[label_end_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = edges_[k].u;
    int w = edges_[k].v;
    const int bb = in_blossom_[base];
    int bv = in_blossom_[v];
    int bw = in_blossom_[w];

    const int b = unused_blossoms_.back();
    unused_blossoms_.pop_back();
    blossom_base_[b] = base;
    blossom_parent_[b] = -1;
    blossom_parent_[bb] = b;

    std::vector<int>& path = blossom_childs_[b];
    std::vector<int>& endps = blossom_endps_[b];
    path.clear();
    endps.clear();
    while (bv != bb) {
      blossom_parent_[bv] = b;
      path.push_back(bv);
      endps.push_back(label_end_[bv]);
      v = endpoint_[label_end_[bv]];
      bv = in_blossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      blossom_parent_[bw] = b;
      path.push_back(bw);
      endps.push_back(label_end_[bw] ^ 1);
      w = endpoint_[label_end_[bw]];
      bw = in_blossom_[w];
    }

    label_[b] = 1;
    label_end_[b] = label_end_[bb];
    dual_[b] = 0;

    std::vector<int> leaves;
    collect_leaves(b, leaves);
    for (int leaf : leaves) {
      if (label_[in_blossom_[leaf]] == 2) queue_.push_back(leaf);
      in_blossom_[leaf] = b;
    }

    std::vector<int> best_edge_to(2 * nvertex_, -1);
    for (int child : path) {
      std::vector<std::vector<int>> nblists;
      if (!has_best_list_[child]) {
        std::vector<int> child_leaves;
        collect_leaves(child, child_leaves);
        for (int leaf : child_leaves) {
          nblists.emplace_back();
          for (int p : neighb_end_[leaf]) nblists.back().push_back(p / 2);
        }
      } else {
        nblists.push_back(blossom_best_edges_[child]);
      }
      for (const auto& nblist : nblists) {
        for (int edge : nblist) {
          int i = edges_[edge].u;
          int j = edges_[edge].v;
          if (in_blossom_[j] == b) std::swap(i, j);
          const int bj = in_blossom_[j];
          if (bj != b && label_[bj] == 1 &&
              (best_edge_to[bj] == -1 || slack(edge) < slack(best_edge_to[bj]))) {
            best_edge_to[bj] = edge;
          }
        }
      }
      blossom_best_edges_[child].clear();
      has_best_list_[child] = false;
      best_edge_[child] = -1;
    }
    blossom_best_edges_[b].clear();
    for (int e : best_edge_to) {
      if (e != -1) blossom_best_edges_[b].push_back(e);
    }
    has_best_list_[b] = true;
    best_edge_[b] = -1;
    for (int e : blossom_best_edges_[b]) {
      if (best_edge_[b] == -1 || slack(e) < slack(best_edge_[b])) best_edge_[b] = e;
    }
  }

  void expand_blossom(int b, bool endstage) {
    for (int s : blossom_childs_[b]) {
      blossom_parent_[s] = -1;
      if (s < nvertex_) {
        in_blossom_[s] = s;
      } else if (endstage && dual_[s] == 0) {
        expand_blossom(s, endstage);
      } else {
        std::vector<int> leaves;
        collect_leaves(s, leaves);
        for (int leaf : leaves) in_blossom_[leaf] = s;
      }
    }

    if (!endstage && label_[b] == 2) {
      const int entry_child = in_blossom_[endpoint_[label_end_[b] ^ 1]];
      const auto& childs = blossom_childs_[b];
      const int len = static_cast<int>(childs.size());
      int j = static_cast<int>(std::find(childs.begin(), childs.end(), entry_child) -
                               childs.begin());
      int jstep, endptrick;
      if (j & 1) {
        j -= len;
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      auto endp_at = [&](int idx) {
        int wrapped = idx % len;
        if (wrapped < 0) wrapped += len;
        return blossom_endps_[b][wrapped];
      };
      auto child_at = [&](int idx) {
        int wrapped = idx % len;
        if (wrapped < 0) wrapped += len;
        return childs[wrapped];
      };

      int p = label_end_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[endp_at(j - endptrick) ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allow_edge_[endp_at(j - endptrick) / 2] = true;
        j += jstep;
        p = endp_at(j - endptrick) ^ endptrick;
        allow_edge_[p / 2] = true;
        j += jstep;
      }
      const int bv = child_at(j);
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      label_end_[endpoint_[p ^ 1]] = label_end_[bv] = p;
      best_edge_[bv] = -1;
      j += jstep;
      while (child_at(j) != entry_child) {
        const int bw = child_at(j);
        if (label_[bw] == 1) {
          j += jstep;
          continue;
        }
        std::vector<int> leaves;
        collect_leaves(bw, leaves);
        int labelled = -1;
        for (int leaf : leaves) {
          if (label_[leaf] != 0) {
            labelled = leaf;
            break;
          }
        }
        if (labelled >= 0) {
          label_[labelled] = 0;
          label_[endpoint_[mate_[blossom_base_[bw]]]] = 0;
          assign_label(labelled, 2, label_end_[labelled]);
        }
        j += jstep;
      }
    }

    label_[b] = -1;
    label_end_[b] = -1;
    blossom_childs_[b].clear();
    blossom_endps_[b].clear();
    blossom_base_[b] = -1;
    blossom_best_edges_[b].clear();
    has_best_list_[b] = false;
    best_edge_[b] = -1;
    unused_blossoms_.push_back(b);
  }

  void augment_blossom(int b, int v) {
    int t = v;
    while (blossom_parent_[t] != b) t = blossom_parent_[t];
    if (t >= nvertex_) augment_blossom(t, v);

    auto& childs = blossom_childs_[b];
    auto& endps = blossom_endps_[b];
    const int len = static_cast<int>(childs.size());
    const int i = static_cast<int>(std::find(childs.begin(), childs.end(), t) - childs.begin());
    int j = i;
    int jstep, endptrick;
    if (i & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    auto endp_at = [&](int idx) {
      int wrapped = idx % len;
      if (wrapped < 0) wrapped += len;
      return endps[wrapped];
    };
    auto child_at = [&](int idx) {
      int wrapped = idx % len;
      if (wrapped < 0) wrapped += len;
      return childs[wrapped];
    };
    while (j != 0) {
      j += jstep;
      int child = child_at(j);
      const int p = endp_at(j - endptrick) ^ endptrick;
      if (child >= nvertex_) augment_blossom(child, endpoint_[p]);
      j += jstep;
      child = child_at(j);
      if (child >= nvertex_) augment_blossom(child, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(childs.begin(), childs.begin() + i, childs.end());
    std::rotate(endps.begin(), endps.begin() + i, endps.end());
    blossom_base_[b] = blossom_base_[childs[0]];
  }

  void augment_matching(int v, int k) {
    const int pairs[2][2] = {{edges_[k].u, 2 * k + 1}, {edges_[k].v, 2 * k}};
    for (const auto& pair : pairs) {
      int s = pair[0];
      int p = pair[1];
      while (true) {
        const int bs = in_blossom_[s];
        if (bs >= nvertex_) augment_blossom(bs, s);
        mate_[s] = p;
        if (label_end_[bs] == -1) break;
        const int t = endpoint_[label_end_[bs]];
        const int bt = in_blossom_[t];
        s = endpoint_[label_end_[bt]];
        const int j = endpoint_[label_end_[bt] ^ 1];
        if (bt >= nvertex_) augment_blossom(bt, j);
        mate_[j] = label_end_[bt];
        p = label_end_[bt] ^ 1;
      }
    }
  }

  int nvertex_;
  std::vector<GeneralWeightedGraph::Edge> edges_;
  int nedge_ = 0;
  std::int64_t max_weight_ = 0;

  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighb_end_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> label_end_;
  std::vector<int> in_blossom_;
  std::vector<int> blossom_parent_;
  std::vector<std::vector<int>> blossom_childs_;
  std::vector<int> blossom_base_;
  std::vector<std::vector<int>> blossom_endps_;
  std::vector<int> best_edge_;
  std::vector<std::vector<int>> blossom_best_edges_;
  std::vector<char> has_best_list_;
  std::vector<int> unused_blossoms_;
  std::vector<std::int64_t> dual_;
  std::vector<char> allow_edge_;
  std::vector<int> queue_;
};

}  // namespace

std::optional<PerfectMatching> min_weight_perfect_matching(const GeneralWeightedGraph& g) {
  const int n = g.vertex_count();
  if (n % 2 != 0) return std::nullopt;
  if (n == 0) return PerfectMatching{{}, 0};

  // Shift weights so that larger cardinality always beats larger weight,
  // then maximize; among perfect matchings this minimizes the original
  // weight. Doubling keeps the matcher's duals integral.
  std::int64_t min_w = 0, max_w = 0;
  if (!g.edges().empty()) {
    min_w = max_w = g.edges()[0].weight;
    for (const auto& e : g.edges()) {
      min_w = std::min(min_w, e.weight);
      max_w = std::max(max_w, e.weight);
    }
  }
  const std::int64_t spread = max_w - min_w;
  const std::int64_t shift = checked_add(max_w, checked_add(checked_mul(n / 2, spread), 1));
  std::vector<GeneralWeightedGraph::Edge> scaled = g.edges();
  for (auto& e : scaled) e.weight = checked_mul(2, shift - e.weight);

  MaxWeightMatcher matcher(n, scaled);
  const std::vector<int> mate = matcher.solve();
  for (int v = 0; v < n; ++v) {
    if (mate[v] < 0) return std::nullopt;
  }

  PerfectMatching result;
  result.mate = mate;
  result.weight = 0;
  for (const auto& e : g.edges()) {
    if (mate[e.u] == e.v) result.weight += e.weight;
  }
  return result;
}

}  // namespace mrta::matching
