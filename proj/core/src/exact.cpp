#include "mrta/exact.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mrta/errors.hpp"
#include "mrta/matching.hpp"
#include "subset_iter.hpp"

namespace mrta::exact {

using detail::for_each_subset;

namespace {

matching::BipartiteDemandGraph subset_graph(const Instance& inst, const std::vector<int>& tasks,
                                            Cost max_edge_cost, bool restrict_edges) {
  matching::BipartiteDemandGraph g;
  g.robot_count = inst.robot_count;
  g.demands.reserve(tasks.size());
  g.edge_cost.reserve(tasks.size());
  for (int j : tasks) {
    g.demands.push_back(inst.requirements[j]);
    std::vector<Cost> row(static_cast<std::size_t>(inst.robot_count));
    for (int i = 0; i < inst.robot_count; ++i) {
      const Cost c = inst.costs[i][j];
      row[i] = (restrict_edges && c > max_edge_cost) ? matching::BipartiteDemandGraph::kNoEdge : c;
    }
    g.edge_cost.push_back(std::move(row));
  }
  return g;
}

Assignment assignment_from_matching(const Instance& inst, const std::vector<int>& tasks,
                                    const matching::BMatching& match) {
  Assignment a = Assignment::idle(inst.robot_count);
  for (const auto& [robot, local_task] : match.edges) {
    a.task_of_robot[robot] = tasks[local_task];
  }
  return a;
}

struct BruteForceSearch {
  const Instance& inst;
  const Budget& budget;
  int n, m;
  std::vector<int> current;
  std::vector<int> assigned;
  std::vector<Cost> task_cost;
  Cost total_cost = 0;
  int handled = 0;
  int best = -1;
  std::vector<int> best_assign;
  SearchStats stats;

  BruteForceSearch(const Instance& i, const Budget& b)
      : inst(i),
        budget(b),
        n(i.robot_count),
        m(i.task_count()),
        current(static_cast<std::size_t>(i.robot_count), Assignment::kIdle),
        assigned(static_cast<std::size_t>(i.task_count()), 0),
        task_cost(static_cast<std::size_t>(i.task_count()), 0) {}

  void run() { dfs(0); }

  void dfs(int robot) {
    ++stats.nodes_expanded;
    if (robot == n) {
      if (handled > best) {
        best = handled;
        best_assign = current;
      }
      return;
    }
    dfs(robot + 1);  // idle first: canonical witnesses favour fewer robots
    for (int j = 0; j < m; ++j) {
      const Cost c = inst.costs[robot][j];
      if (!admissible(robot, j, c)) {
        ++stats.prunes;
        continue;
      }
      apply(robot, j, c);
      dfs(robot + 1);
      undo(robot, j, c);
    }
  }

  bool admissible(int /*robot*/, int j, Cost c) const {
    switch (budget.kind) {
      case BudgetKind::Total:
        return total_cost + c <= budget.value;
      case BudgetKind::PerRobot:
        return c <= budget.value;
      case BudgetKind::PerTask:
        // Once a task is at quota its cost can never shrink again.
        return assigned[j] + 1 < inst.requirements[j] || task_cost[j] + c <= budget.value;
    }
    return false;
  }

  void apply(int robot, int j, Cost c) {
    current[robot] = j;
    if (++assigned[j] == inst.requirements[j]) ++handled;
    task_cost[j] += c;
    total_cost += c;
  }

  void undo(int robot, int j, Cost c) {
    current[robot] = Assignment::kIdle;
    if (assigned[j]-- == inst.requirements[j]) --handled;
    task_cost[j] -= c;
    total_cost -= c;
  }
};

}  // namespace

SolveReport brute_force(const Instance& inst, const Budget& b, const BruteForceLimits& limits) {
  if (inst.robot_count > limits.max_robots || inst.task_count() > limits.max_tasks) {
    throw CapExceededError("brute force cap exceeded: " + std::to_string(inst.robot_count) +
                           " robots x " + std::to_string(inst.task_count()) + " tasks (cap " +
                           std::to_string(limits.max_robots) + " x " +
                           std::to_string(limits.max_tasks) + ")");
  }
  BruteForceSearch search(inst, b);
  search.run();
  SolveReport report;
  report.handled_count = search.best;
  report.assignment = Assignment{search.best_assign};
  report.solver = "brute-force";
  report.optimal = true;
  report.stats = search.stats;
  return report;
}

SolveReport exact_total_budget(const Instance& inst, Cost total_budget) {
  const int m = inst.task_count();
  SolveReport report;
  report.solver = "exact-total";
  report.optimal = true;

  for (int k = m; k >= 0; --k) {
    bool found = for_each_subset(m, k, [&](const std::vector<int>& subset) {
      std::int64_t demand = 0;
      for (int j : subset) demand += inst.requirements[j];
      if (demand > inst.robot_count) return false;
      ++report.stats.subsets_examined;
      const auto match = matching::min_cost_b_matching(subset_graph(inst, subset, 0, false));
      if (!match || match->cost > total_budget) return false;
      report.handled_count = k;
      report.assignment = assignment_from_matching(inst, subset, *match);
      return true;
    });
    if (found) return report;
  }
  // k = 0 always succeeds (empty assignment has cost 0), so we cannot get here.
  throw std::logic_error("subset scan failed to terminate");
}

namespace {

struct TaskBudgetSearch {
  const Instance& inst;
  Cost budget;
  int n, m;
  std::vector<char> robot_used;
  std::vector<int> current;
  int best = -1;
  std::vector<int> best_assign;
  SearchStats stats;

  TaskBudgetSearch(const Instance& i, Cost w)
      : inst(i),
        budget(w),
        n(i.robot_count),
        m(i.task_count()),
        robot_used(static_cast<std::size_t>(i.robot_count), 0),
        current(static_cast<std::size_t>(i.robot_count), Assignment::kIdle) {}

  struct Candidate {
    Cost cost;
    std::vector<int> robots;
  };

  std::vector<Candidate> candidates(int task) const {
    std::vector<int> free;
    for (int i = 0; i < n; ++i) {
      if (!robot_used[i]) free.push_back(i);
    }
    const int q = inst.requirements[task];
    std::vector<Candidate> out;
    if (q > static_cast<int>(free.size())) return out;
    std::vector<int> pick;
    Cost cost = 0;
    const std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(pick.size()) == q) {
        if (cost <= budget) out.push_back({cost, pick});
        return;
      }
      const int needed = q - static_cast<int>(pick.size());
      for (int idx = start; idx + needed <= static_cast<int>(free.size()); ++idx) {
        pick.push_back(free[idx]);
        cost += inst.costs[free[idx]][task];
        rec(idx + 1);
        cost -= inst.costs[free[idx]][task];
        pick.pop_back();
      }
    };
    rec(0);
    std::stable_sort(out.begin(), out.end(),
                     [](const Candidate& a, const Candidate& b) { return a.cost < b.cost; });
    return out;
  }

  void dfs(int task, int count) {
    ++stats.nodes_expanded;
    if (count + (m - task) <= best) {
      ++stats.prunes;
      return;
    }
    if (task == m) {
      if (count > best) {
        best = count;
        best_assign = current;
      }
      return;
    }
    for (const Candidate& cand : candidates(task)) {
      for (int r : cand.robots) {
        robot_used[r] = 1;
        current[r] = task;
      }
      dfs(task + 1, count + 1);
      for (int r : cand.robots) {
        robot_used[r] = 0;
        current[r] = Assignment::kIdle;
      }
    }
    dfs(task + 1, count);
  }
};

}  // namespace

SolveReport exact_task_budget(const Instance& inst, Cost task_budget) {
  TaskBudgetSearch search(inst, task_budget);
  search.dfs(0, 0);
  SolveReport report;
  report.handled_count = search.best;
  report.assignment = Assignment{search.best_assign};
  report.solver = "exact-task";
  report.optimal = true;
  report.stats = search.stats;
  return report;
}

SolveReport exact_robot_budget(const Instance& inst, Cost robot_budget) {
  const int m = inst.task_count();
  SolveReport report;
  report.solver = "exact-robot";
  report.optimal = true;

  for (int k = m; k >= 0; --k) {
    bool found = for_each_subset(m, k, [&](const std::vector<int>& subset) {
      std::int64_t demand = 0;
      for (int j : subset) demand += inst.requirements[j];
      if (demand > inst.robot_count) return false;
      ++report.stats.subsets_examined;
      const auto g = subset_graph(inst, subset, robot_budget, true);
      if (!matching::b_matching_feasible(g)) return false;
      const auto match = matching::min_cost_b_matching(g);
      if (!match) throw std::logic_error("feasible subset without matching");
      report.handled_count = k;
      report.assignment = assignment_from_matching(inst, subset, *match);
      return true;
    });
    if (found) return report;
  }
  throw std::logic_error("subset scan failed to terminate");
}

namespace {

std::string var_x(int robot, int task) {
  return "x_" + std::to_string(robot + 1) + "_" + std::to_string(task + 1);
}

std::string var_z(int task) { return "z_" + std::to_string(task + 1); }

}  // namespace

std::string export_lp(const Instance& inst, const Budget& b) {
  const int n = inst.robot_count;
  const int m = inst.task_count();
  std::ostringstream out;

  out << "Maximize\n obj: ";
  if (m == 0) {
    out << "0";
  } else {
    for (int j = 0; j < m; ++j) {
      if (j > 0) out << " + ";
      out << var_z(j);
    }
  }
  out << "\nSubject To\n";

  switch (b.kind) {
    case BudgetKind::Total:
      if (n > 0 && m > 0) {
        out << " budget:";
        bool first = true;
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < m; ++j) {
            out << (first ? " " : " + ") << inst.costs[i][j] << " " << var_x(i, j);
            first = false;
          }
        }
        out << " <= " << b.value << "\n";
      }
      break;
    case BudgetKind::PerTask:
      for (int j = 0; j < m; ++j) {
        out << " budget_" << (j + 1) << ":";
        for (int i = 0; i < n; ++i) {
          out << (i == 0 ? " " : " + ") << inst.costs[i][j] << " " << var_x(i, j);
        }
        out << " - " << b.value << " " << var_z(j) << " <= 0\n";
      }
      break;
    case BudgetKind::PerRobot:
      if (m > 0) {
        for (int i = 0; i < n; ++i) {
          out << " budget_" << (i + 1) << ":";
          for (int j = 0; j < m; ++j) {
            out << (j == 0 ? " " : " + ") << inst.costs[i][j] << " " << var_x(i, j);
          }
          out << " <= " << b.value << "\n";
        }
      }
      break;
  }

  for (int j = 0; j < m; ++j) {
    out << " cover_" << (j + 1) << ":";
    for (int i = 0; i < n; ++i) {
      out << (i == 0 ? " " : " + ") << var_x(i, j);
    }
    out << " - " << inst.requirements[j] << " " << var_z(j) << " >= 0\n";
  }

  if (m > 0) {
    for (int i = 0; i < n; ++i) {
      out << " robot_" << (i + 1) << ":";
      for (int j = 0; j < m; ++j) {
        out << (j == 0 ? " " : " + ") << var_x(i, j);
      }
      out << " <= 1\n";
    }
  }

  if (n * m > 0 || m > 0) {
    out << "Binary\n";
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        out << " " << var_x(i, j) << "\n";
      }
    }
    for (int j = 0; j < m; ++j) {
      out << " " << var_z(j) << "\n";
    }
  }
  out << "End\n";
  return out.str();
}

}  // namespace mrta::exact
