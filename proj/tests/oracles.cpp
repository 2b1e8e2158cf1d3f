#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace oracles {

namespace {

// Calls visit(assignment) for every mapping robots -> tasks + idle (-1).
void enumerate_assignments(const mrta::Instance& inst,
                           const std::function<void(const std::vector<int>&)>& visit) {
  const int n = inst.robot_count;
  const int m = inst.task_count();
  std::vector<int> choice(static_cast<std::size_t>(n), -1);
  while (true) {
    visit(choice);
    int i = 0;
    while (i < n && choice[i] == m - 1) choice[i++] = -1;
    if (i == n) break;
    ++choice[i];
  }
}

struct Tally {
  int handled = 0;
  mrta::Cost total = 0;
  std::vector<mrta::Cost> task_cost;
  std::vector<int> assigned;
};

Tally tally(const mrta::Instance& inst, const std::vector<int>& choice) {
  Tally t;
  t.task_cost.assign(static_cast<std::size_t>(inst.task_count()), 0);
  t.assigned.assign(static_cast<std::size_t>(inst.task_count()), 0);
  for (int i = 0; i < inst.robot_count; ++i) {
    if (choice[i] < 0) continue;
    ++t.assigned[choice[i]];
    t.task_cost[choice[i]] += inst.costs[i][choice[i]];
    t.total += inst.costs[i][choice[i]];
  }
  for (int j = 0; j < inst.task_count(); ++j) {
    if (t.assigned[j] >= inst.requirements[j]) ++t.handled;
  }
  return t;
}

bool within_budget(const mrta::Instance& inst, const mrta::Budget& budget, const Tally& t,
                   const std::vector<int>& choice) {
  switch (budget.kind) {
    case mrta::BudgetKind::Total:
      return t.total <= budget.value;
    case mrta::BudgetKind::PerTask:
      for (int j = 0; j < inst.task_count(); ++j) {
        if (t.assigned[j] >= inst.requirements[j] && t.task_cost[j] > budget.value) return false;
      }
      return true;
    case mrta::BudgetKind::PerRobot:
      for (int i = 0; i < inst.robot_count; ++i) {
        if (choice[i] >= 0 && inst.costs[i][choice[i]] > budget.value) return false;
      }
      return true;
  }
  return false;
}

}  // namespace

int best_count_by_enumeration(const mrta::Instance& inst, const mrta::Budget& budget) {
  int best = 0;
  enumerate_assignments(inst, [&](const std::vector<int>& choice) {
    const Tally t = tally(inst, choice);
    if (within_budget(inst, budget, t, choice)) best = std::max(best, t.handled);
  });
  return best;
}

std::optional<mrta::Cost> min_cost_exactly_k(const mrta::Instance& inst, int k) {
  std::optional<mrta::Cost> best;
  enumerate_assignments(inst, [&](const std::vector<int>& choice) {
    const Tally t = tally(inst, choice);
    if (t.handled == k && (!best || t.total < *best)) best = t.total;
  });
  return best;
}

std::vector<std::optional<mrta::Cost>> min_cost_per_count(const mrta::Instance& inst) {
  std::vector<std::optional<mrta::Cost>> best(static_cast<std::size_t>(inst.task_count()) + 1);
  enumerate_assignments(inst, [&](const std::vector<int>& choice) {
    const Tally t = tally(inst, choice);
    auto& slot = best[t.handled];
    if (!slot || t.total < *slot) slot = t.total;
  });
  return best;
}

std::optional<mrta::Cost> min_cost_handle_all(const mrta::Instance& inst) {
  return min_cost_exactly_k(inst, inst.task_count());
}

std::optional<mrta::Cost> min_cost_b_matching(const mrta::matching::BipartiteDemandGraph& g) {
  const int tasks = g.task_count();
  std::vector<char> used(static_cast<std::size_t>(g.robot_count), 0);
  std::optional<mrta::Cost> best;

  const std::function<void(int, mrta::Cost)> place = [&](int task, mrta::Cost cost) {
    if (task == tasks) {
      if (!best || cost < *best) best = cost;
      return;
    }
    const int need = g.demands[task];
    std::vector<int> chosen;
    const std::function<void(int, mrta::Cost)> pick = [&](int start, mrta::Cost sum) {
      if (static_cast<int>(chosen.size()) == need) {
        place(task + 1, cost + sum);
        return;
      }
      for (int r = start; r < g.robot_count; ++r) {
        if (used[r] || g.edge_cost[task][r] == mrta::matching::BipartiteDemandGraph::kNoEdge) {
          continue;
        }
        used[r] = 1;
        chosen.push_back(r);
        pick(r + 1, sum + g.edge_cost[task][r]);
        chosen.pop_back();
        used[r] = 0;
      }
    };
    pick(0, 0);
  };
  place(0, 0);
  return best;
}

std::optional<std::int64_t> min_weight_perfect_matching(
    const mrta::matching::GeneralWeightedGraph& g) {
  const int n = g.vertex_count();
  if (n % 2 != 0) return std::nullopt;
  std::map<std::pair<int, int>, std::int64_t> weight;
  for (const auto& e : g.edges()) {
    weight[{std::min(e.u, e.v), std::max(e.u, e.v)}] = e.weight;
  }
  std::vector<char> matched(static_cast<std::size_t>(n), 0);
  std::optional<std::int64_t> best;
  const std::function<void(std::int64_t)> rec = [&](std::int64_t sum) {
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (!matched[v]) {
        u = v;
        break;
      }
    }
    if (u == -1) {
      if (!best || sum < *best) best = sum;
      return;
    }
    matched[u] = 1;
    for (int v = u + 1; v < n; ++v) {
      if (matched[v]) continue;
      const auto it = weight.find({u, v});
      if (it == weight.end()) continue;
      matched[v] = 1;
      rec(sum + it->second);
      matched[v] = 0;
    }
    matched[u] = 0;
  };
  rec(0);
  return best;
}

int independence_number(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  int best = 0;
  for (int mask = 0; mask < (1 << vertex_count); ++mask) {
    bool ok = true;
    for (const auto& [a, b] : edges) {
      if ((mask >> a & 1) && (mask >> b & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(static_cast<unsigned>(mask)));
  }
  return best;
}

bool three_partition_exists(const std::vector<std::int64_t>& numbers, int k) {
  if (k < 1 || static_cast<int>(numbers.size()) != 3 * k) return false;
  const std::int64_t sum = std::accumulate(numbers.begin(), numbers.end(), std::int64_t{0});
  if (sum % k != 0) return false;
  const std::int64_t target = sum / k;

  std::vector<std::int64_t> sorted = numbers;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  std::vector<std::int64_t> room(static_cast<std::size_t>(k), target);
  std::vector<int> slots(static_cast<std::size_t>(k), 3);
  const std::function<bool(std::size_t)> place = [&](std::size_t idx) {
    if (idx == sorted.size()) return true;
    for (int b = 0; b < k; ++b) {
      if (slots[b] == 0 || room[b] < sorted[idx]) continue;
      room[b] -= sorted[idx];
      --slots[b];
      if (place(idx + 1)) return true;
      room[b] += sorted[idx];
      ++slots[b];
      if (room[b] == target) break;  // empty buckets are interchangeable
    }
    return false;
  };
  return place(0);
}

int two_kp_optimum(const mrta::instances::TwoKPInstance& kp) {
  const int m = static_cast<int>(kp.items.size());
  int best = 0;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::int64_t s1 = 0, s2 = 0;
    for (int j = 0; j < m; ++j) {
      if (mask >> j & 1) {
        s1 += kp.items[j].size1;
        s2 += kp.items[j].size2;
      }
    }
    if (s1 <= kp.capacity1 && s2 <= kp.capacity2) {
      best = std::max(best, __builtin_popcount(static_cast<unsigned>(mask)));
    }
  }
  return best;
}

namespace {

mrta::Instance symmetric_instance(int robots, std::vector<int> q, std::vector<mrta::Cost> c) {
  mrta::Instance inst;
  inst.robot_count = robots;
  inst.requirements = std::move(q);
  inst.costs.assign(static_cast<std::size_t>(robots), c);
  inst.symmetric_costs = std::move(c);
  return inst;
}

}  // namespace

mrta::Instance example1() { return symmetric_instance(4, {1, 2, 2}, {100, 1, 1}); }

mrta::Instance example2() { return symmetric_instance(100, {100, 2, 2}, {1, 60, 60}); }

int requirement_sorted_greedy(const mrta::Instance& inst, mrta::Cost total_budget) {
  std::vector<int> order(static_cast<std::size_t>(inst.task_count()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.requirements[a] < inst.requirements[b];
  });

  std::vector<char> used(static_cast<std::size_t>(inst.robot_count), 0);
  int free_robots = inst.robot_count;
  mrta::Cost spent = 0;
  int handled = 0;
  for (int j : order) {
    const int q = inst.requirements[j];
    if (q > free_robots) break;
    // cheapest q free robots for task j
    std::vector<int> free;
    for (int i = 0; i < inst.robot_count; ++i) {
      if (!used[i]) free.push_back(i);
    }
    std::stable_sort(free.begin(), free.end(),
                     [&](int a, int b) { return inst.costs[a][j] < inst.costs[b][j]; });
    mrta::Cost cost = 0;
    for (int t = 0; t < q; ++t) cost += inst.costs[free[t]][j];
    if (spent + cost > total_budget) break;
    for (int t = 0; t < q; ++t) used[free[t]] = 1;
    spent += cost;
    free_robots -= q;
    ++handled;
  }
  return handled;
}

}  // namespace oracles
