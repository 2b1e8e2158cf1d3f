#include "mrta/polycases.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "mrta/errors.hpp"
#include "mrta/matching.hpp"

namespace mrta::polycases {

namespace {

void require_symmetric(const Instance& inst, const char* solver) {
  if (!inst.symmetric_costs) {
    throw PreconditionError(std::string(solver) + " requires the symmetric cost tag");
  }
}

std::vector<int> take_free_robots(std::vector<char>& used, int count) {
  std::vector<int> picked;
  for (std::size_t i = 0; i < used.size() && static_cast<int>(picked.size()) < count; ++i) {
    if (!used[i]) {
      used[i] = 1;
      picked.push_back(static_cast<int>(i));
    }
  }
  return picked;
}

}  // namespace

std::optional<CostedAssignment> min_cost_handle_all(const Instance& inst) {
  const int n = inst.robot_count;
  const int m = inst.task_count();
  std::int64_t total_demand = 0;
  for (int q : inst.requirements) total_demand += q;
  if (total_demand > n) return std::nullopt;

  matching::BipartiteDemandGraph g;
  g.robot_count = n;
  g.demands.assign(inst.requirements.begin(), inst.requirements.end());
  for (int j = 0; j < m; ++j) {
    std::vector<Cost> row(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) row[i] = inst.costs[i][j];
    g.edge_cost.push_back(std::move(row));
  }
  // Dummy task absorbing the spare robots at zero cost makes the b-matching
  // perfect on the robot side.
  g.demands.push_back(static_cast<int>(n - total_demand));
  g.edge_cost.emplace_back(static_cast<std::size_t>(n), 0);

  const auto match = matching::min_cost_b_matching(g);
  if (!match) return std::nullopt;

  CostedAssignment out;
  out.cost = match->cost;
  out.assignment = Assignment::idle(n);
  for (const auto& [robot, task] : match->edges) {
    if (task < m) out.assignment.task_of_robot[robot] = task;
  }
  return out;
}

SolveReport solve_symmetric_uniform_total(const Instance& inst, Cost total_budget) {
  require_symmetric(inst, "symmetric-uniform");
  if (!inst.uniform_requirement) {
    throw PreconditionError("symmetric-uniform requires the uniform requirement tag");
  }
  const int m = inst.task_count();
  const int q = *inst.uniform_requirement;
  const std::vector<Cost>& c = *inst.symmetric_costs;

  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return c[a] != c[b] ? c[a] < c[b] : a < b;
  });

  SolveReport report;
  report.solver = "symmetric-uniform";
  report.optimal = true;
  report.assignment = Assignment::idle(inst.robot_count);
  std::vector<char> used(static_cast<std::size_t>(inst.robot_count), 0);
  Cost spent = 0;
  int free_robots = inst.robot_count;
  for (int j : order) {
    ++report.stats.nodes_expanded;
    const Cost task_cost = checked_mul(q, c[j]);
    if (free_robots < q || spent + task_cost > total_budget) break;
    for (int r : take_free_robots(used, q)) report.assignment.task_of_robot[r] = j;
    spent += task_cost;
    free_robots -= q;
    ++report.handled_count;
  }
  return report;
}

SolveReport solve_symmetric_task(const Instance& inst, Cost task_budget) {
  require_symmetric(inst, "symmetric-task");
  const int m = inst.task_count();
  const std::vector<Cost>& c = *inst.symmetric_costs;

  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  if (!inst.uniform_requirement) {
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (inst.requirements[a] != inst.requirements[b]) {
        return inst.requirements[a] < inst.requirements[b];
      }
      return c[a] != c[b] ? c[a] < c[b] : a < b;
    });
  }

  SolveReport report;
  report.solver = "symmetric-task";
  report.optimal = true;
  report.assignment = Assignment::idle(inst.robot_count);
  std::vector<char> used(static_cast<std::size_t>(inst.robot_count), 0);
  int free_robots = inst.robot_count;
  for (int j : order) {
    ++report.stats.nodes_expanded;
    const int q = inst.requirements[j];
    if (free_robots < q) break;  // later tasks need at least as many robots
    if (checked_mul(q, c[j]) > task_budget) continue;
    for (int r : take_free_robots(used, q)) report.assignment.task_of_robot[r] = j;
    free_robots -= q;
    ++report.handled_count;
  }
  return report;
}

SolveReport solve_symmetric_robot(const Instance& inst, Cost robot_budget) {
  require_symmetric(inst, "symmetric-robot");
  const int m = inst.task_count();
  const std::vector<Cost>& c = *inst.symmetric_costs;

  std::vector<int> surviving;
  Cost artificial_budget = 0;
  for (int j = 0; j < m; ++j) {
    if (c[j] <= robot_budget) {
      surviving.push_back(j);
      artificial_budget = std::max(artificial_budget, checked_mul(inst.requirements[j], c[j]));
    }
  }

  Instance sub;
  sub.robot_count = inst.robot_count;
  sub.symmetric_costs = std::vector<Cost>{};
  for (int j : surviving) {
    sub.requirements.push_back(inst.requirements[j]);
    sub.symmetric_costs->push_back(c[j]);
  }
  sub.costs.assign(static_cast<std::size_t>(inst.robot_count), {});
  for (int i = 0; i < inst.robot_count; ++i) {
    for (int j : surviving) sub.costs[i].push_back(inst.costs[i][j]);
  }

  SolveReport inner = solve_symmetric_task(sub, artificial_budget);
  SolveReport report;
  report.solver = "symmetric-robot";
  report.optimal = true;
  report.handled_count = inner.handled_count;
  report.stats = inner.stats;
  report.assignment = Assignment::idle(inst.robot_count);
  for (int i = 0; i < inst.robot_count; ++i) {
    const int local = inner.assignment.task_of_robot[i];
    if (local != Assignment::kIdle) report.assignment.task_of_robot[i] = surviving[local];
  }
  return report;
}

std::optional<CostedAssignment> min_cost_exactly_k_q2(const Instance& inst, int k) {
  if (inst.max_requirement() > 2) {
    throw PreconditionError("q2 gadget requires every requirement <= 2");
  }
  const int n = inst.robot_count;
  const int m = inst.task_count();
  if (k < 0 || k > m) throw std::invalid_argument("k out of range");

  std::vector<int> dummy_task;  // dummy robot index (offset by n) -> its task
  for (int j = 0; j < m; ++j) {
    if (inst.requirements[j] == 1) dummy_task.push_back(j);
  }
  const int robots = n + static_cast<int>(dummy_task.size());  // n'
  if (2 * k > robots) return std::nullopt;

  const int twin_base = robots;                 // a_j = twin_base + 2j, b_j = +1
  const int absorber_base = twin_base + 2 * m;  // n' - 2k absorbers
  const int absorbers = robots - 2 * k;
  matching::GeneralWeightedGraph g(absorber_base + absorbers);

  for (int j = 0; j < m; ++j) {
    const int a = twin_base + 2 * j;
    const int b = a + 1;
    g.add_edge(a, b, 0);  // skip edge: task j stays unhandled
    for (int i = 0; i < n; ++i) {
      g.add_edge(i, a, inst.costs[i][j]);
      g.add_edge(i, b, inst.costs[i][j]);
    }
  }
  for (std::size_t d = 0; d < dummy_task.size(); ++d) {
    const int a = twin_base + 2 * dummy_task[d];
    g.add_edge(n + static_cast<int>(d), a, 0);
    g.add_edge(n + static_cast<int>(d), a + 1, 0);
  }
  for (int x = 0; x < absorbers; ++x) {
    for (int r = 0; r < robots; ++r) g.add_edge(absorber_base + x, r, 0);
  }

  const auto match = matching::min_weight_perfect_matching(g);
  if (!match) return std::nullopt;

  CostedAssignment out;
  out.cost = match->weight;
  out.assignment = Assignment::idle(n);
  for (int j = 0; j < m; ++j) {
    const int a = twin_base + 2 * j;
    const int b = a + 1;
    if (match->mate[a] == b) continue;  // skipped
    for (int twin : {a, b}) {
      const int r = match->mate[twin];
      if (r < n) out.assignment.task_of_robot[r] = j;
    }
  }
  return out;
}

KCostCurve build_k_cost_curve(const Instance& inst) {
  KCostCurve curve;
  curve.reserve(static_cast<std::size_t>(inst.task_count()) + 1);
  for (int k = 0; k <= inst.task_count(); ++k) {
    curve.push_back(min_cost_exactly_k_q2(inst, k));
  }
  return curve;
}

SolveReport solve_q2(const Instance& inst, const Budget& b) {
  if (inst.max_requirement() > 2) {
    throw PreconditionError("q2 solver requires every requirement <= 2");
  }
  if (b.kind == BudgetKind::PerTask) {
    throw PreconditionError("q2 solver handles total and per-robot budgets only");
  }

  const bool per_robot = b.kind == BudgetKind::PerRobot;
  const Instance work = per_robot ? restrict_by_robot_budget(inst, b.value) : inst;
  const Cost budget = per_robot ? checked_mul(inst.robot_count, b.value) : b.value;

  SolveReport report;
  report.solver = "q2";
  report.optimal = true;
  report.assignment = Assignment::idle(inst.robot_count);

  std::map<int, std::optional<CostedAssignment>> memo;
  const auto fits = [&](int k) {
    auto it = memo.find(k);
    if (it == memo.end()) {
      ++report.stats.nodes_expanded;
      it = memo.emplace(k, min_cost_exactly_k_q2(work, k)).first;
    }
    return it->second && it->second->cost <= budget;
  };

  // Curve costs are monotone where feasible, so the predicate is monotone
  // and binary search applies. k = 0 always fits (empty assignment, cost 0).
  int lo = 0, hi = inst.task_count();
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }

  report.handled_count = lo;
  if (lo > 0) report.assignment = memo[lo] ? memo[lo]->assignment : report.assignment;
  return report;
}

}  // namespace mrta::polycases
