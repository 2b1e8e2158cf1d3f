#include "mrta/approx.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mrta/errors.hpp"
#include "subset_iter.hpp"

namespace mrta::approx {

namespace {

struct CompletingSet {
  Cost cost = 0;
  std::vector<int> robots;
};

// The q_j cheapest free robots for a task, ties by robot index (which also
// makes the set the lexicographically smallest one of minimum cost).
std::optional<CompletingSet> cheapest_completing_set(const Instance& inst,
                                                     const std::vector<char>& robot_used,
                                                     int task) {
  const int q = inst.requirements[task];
  std::vector<int> free;
  for (int i = 0; i < inst.robot_count; ++i) {
    if (!robot_used[i]) free.push_back(i);
  }
  if (static_cast<int>(free.size()) < q) return std::nullopt;
  std::stable_sort(free.begin(), free.end(), [&](int a, int b) {
    return inst.costs[a][task] < inst.costs[b][task];
  });
  CompletingSet set;
  set.robots.assign(free.begin(), free.begin() + q);
  std::sort(set.robots.begin(), set.robots.end());
  for (int r : set.robots) set.cost += inst.costs[r][task];
  return set;
}

enum class GreedyAcceptance { Cumulative, PerSet };

SolveReport greedy_loop(const Instance& inst, Cost budget, GreedyAcceptance acceptance,
                        const char* solver) {
  SolveReport report;
  report.solver = solver;
  report.assignment = Assignment::idle(inst.robot_count);

  std::vector<char> task_done(static_cast<std::size_t>(inst.task_count()), 0);
  std::vector<char> robot_used(static_cast<std::size_t>(inst.robot_count), 0);
  Cost spent = 0;

  while (true) {
    ++report.stats.nodes_expanded;
    int best_task = -1;
    CompletingSet best;
    for (int j = 0; j < inst.task_count(); ++j) {
      if (task_done[j]) continue;
      const auto set = cheapest_completing_set(inst, robot_used, j);
      if (!set) continue;
      if (best_task == -1 || set->cost < best.cost) {
        best_task = j;
        best = *set;
      }
    }
    if (best_task == -1) break;

    if (acceptance == GreedyAcceptance::Cumulative) {
      if (spent + best.cost > budget) break;
    } else {
      if (best.cost > budget) {
        // This set only gets more expensive as robots deplete; drop the task.
        task_done[best_task] = 1;
        ++report.stats.prunes;
        continue;
      }
    }

    for (int r : best.robots) {
      robot_used[r] = 1;
      report.assignment.task_of_robot[r] = best_task;
    }
    spent += best.cost;
    task_done[best_task] = 1;
    ++report.handled_count;
  }
  return report;
}

}  // namespace

SolveReport greedy_total(const Instance& inst, Cost total_budget) {
  return greedy_loop(inst, total_budget, GreedyAcceptance::Cumulative, "greedy-total");
}

SolveReport greedy_task(const Instance& inst, Cost task_budget) {
  return greedy_loop(inst, task_budget, GreedyAcceptance::PerSet, "greedy-task");
}

SolveReport greedy_robot(const Instance& inst, Cost robot_budget) {
  Cost max_cost = 0;
  for (const auto& row : inst.costs) {
    for (Cost c : row) max_cost = std::max(max_cost, c);
  }
  const Cost big = checked_mul(checked_mul(inst.task_count(), inst.robot_count), max_cost);

  Instance work = inst;
  work.symmetric_costs.reset();
  work.locations.reset();
  for (auto& row : work.costs) {
    for (Cost& c : row) {
      if (c > robot_budget) c = big;
    }
  }

  SolveReport inner = greedy_loop(work, big, GreedyAcceptance::Cumulative, "greedy-robot");

  // A rewritten edge can slip into the very first pick when its cost equals
  // the whole budget; report only tasks whose pairs respect the real bound.
  SolveReport report;
  report.solver = "greedy-robot";
  report.stats = inner.stats;
  report.assignment = inner.assignment;
  std::vector<char> drop(static_cast<std::size_t>(inst.task_count()), 0);
  for (int i = 0; i < inst.robot_count; ++i) {
    const int j = inner.assignment.task_of_robot[i];
    if (j != Assignment::kIdle && inst.costs[i][j] > robot_budget) drop[j] = 1;
  }
  for (int i = 0; i < inst.robot_count; ++i) {
    const int j = report.assignment.task_of_robot[i];
    if (j != Assignment::kIdle && drop[j]) report.assignment.task_of_robot[i] = Assignment::kIdle;
  }
  report.handled_count = evaluate(inst, report.assignment).handled_count;
  return report;
}

namespace {

struct CandidateSet {
  int task = 0;
  std::vector<int> real_robots;  // q_j <= size <= q*; rest filled by dummies
};

struct Packing {
  std::vector<int> chosen;  // indices into the candidate family
};

bool disjoint_from(const CandidateSet& cand, const std::vector<char>& task_taken,
                   const std::vector<char>& robot_taken) {
  if (task_taken[cand.task]) return false;
  for (int r : cand.real_robots) {
    if (robot_taken[r]) return false;
  }
  return true;
}

void mark(const CandidateSet& cand, std::vector<char>& task_taken, std::vector<char>& robot_taken,
          bool value) {
  task_taken[cand.task] = value;
  for (int r : cand.real_robots) robot_taken[r] = value;
}

}  // namespace

SolveReport set_packing_local_search(const Instance& inst, BudgetKind kind, Cost budget,
                                     const SetPackingOptions& opts) {
  if (kind == BudgetKind::Total) {
    throw PreconditionError("set-packing handles per-task and per-robot budgets only");
  }
  const int q_star = inst.max_requirement();
  if (q_star > opts.max_requirement_cap) {
    throw CapExceededError("set-packing cap exceeded: q* = " + std::to_string(q_star) +
                           " > " + std::to_string(opts.max_requirement_cap));
  }
  const int n = inst.robot_count;
  const int m = inst.task_count();

  // Padding every task to q* with its own zero-cost dummies means a
  // candidate is a task plus between q_j and q* real robots; dummy identity
  // never matters for disjointness because sets of one task already clash.
  std::vector<CandidateSet> family;
  for (int j = 0; j < m; ++j) {
    const int q = inst.requirements[j];
    for (int real = q; real <= std::min(q_star, n); ++real) {
      detail::for_each_subset(n, real, [&](const std::vector<int>& robots) {
        Cost sum = 0;
        bool ok = true;
        for (int r : robots) {
          const Cost c = inst.costs[r][j];
          if (kind == BudgetKind::PerRobot && c > budget) {
            ok = false;
            break;
          }
          sum += c;
        }
        if (ok && (kind != BudgetKind::PerTask || sum <= budget)) {
          family.push_back({j, robots});
        }
        return false;
      });
    }
  }

  SolveReport report;
  report.solver = "set-packing";
  report.assignment = Assignment::idle(n);
  report.stats.nodes_expanded = static_cast<std::int64_t>(family.size());

  std::vector<char> task_taken(static_cast<std::size_t>(m), 0);
  std::vector<char> robot_taken(static_cast<std::size_t>(n), 0);
  Packing packing;
  for (std::size_t idx = 0; idx < family.size(); ++idx) {
    if (disjoint_from(family[idx], task_taken, robot_taken)) {
      mark(family[idx], task_taken, robot_taken, true);
      packing.chosen.push_back(static_cast<int>(idx));
    }
  }

  // Local search: replace any p <= swap_depth packed sets by p+1 disjoint ones.
  const auto find_disjoint = [&](int want, std::vector<int>& picked) {
    const std::function<bool(std::size_t)> rec = [&](std::size_t start) {
      if (static_cast<int>(picked.size()) == want) return true;
      for (std::size_t idx = start; idx < family.size(); ++idx) {
        if (!disjoint_from(family[idx], task_taken, robot_taken)) continue;
        mark(family[idx], task_taken, robot_taken, true);
        picked.push_back(static_cast<int>(idx));
        if (rec(idx + 1)) return true;
        mark(family[idx], task_taken, robot_taken, false);
        picked.pop_back();
      }
      return false;
    };
    return rec(0);
  };

  bool improved = true;
  while (improved) {
    improved = false;
    for (int p = 1; p <= opts.swap_depth && !improved; ++p) {
      if (p > static_cast<int>(packing.chosen.size())) break;
      detail::for_each_subset(
          static_cast<int>(packing.chosen.size()), p, [&](const std::vector<int>& positions) {
            for (int pos : positions) mark(family[packing.chosen[pos]], task_taken, robot_taken, false);
            std::vector<int> incoming;
            if (find_disjoint(p + 1, incoming)) {
              std::vector<int> next;
              for (std::size_t pos = 0; pos < packing.chosen.size(); ++pos) {
                if (!std::binary_search(positions.begin(), positions.end(), static_cast<int>(pos))) {
                  next.push_back(packing.chosen[pos]);
                }
              }
              next.insert(next.end(), incoming.begin(), incoming.end());
              std::sort(next.begin(), next.end());
              packing.chosen = next;
              improved = true;
              ++report.stats.subsets_examined;
              return true;
            }
            for (int pos : positions) mark(family[packing.chosen[pos]], task_taken, robot_taken, true);
            return false;
          });
    }
  }

  for (int idx : packing.chosen) {
    for (int r : family[idx].real_robots) report.assignment.task_of_robot[r] = family[idx].task;
  }
  report.handled_count = static_cast<int>(packing.chosen.size());
  return report;
}

int FractionalSolution::fractional_count() const {
  int count = 0;
  for (const Rational& v : x) {
    if (v > Rational(0) && v < Rational(1)) ++count;
  }
  return count;
}

namespace {

using Row = std::vector<Rational>;

// Primal simplex with Bland's rule on an all-slack starting basis; exact
// rational arithmetic throughout.
struct SimplexTableau {
  int rows = 0;
  int vars = 0;
  std::vector<Row> a;  // rows x (vars+1), rhs last
  Row z;               // vars+1, starts as -objective
  std::vector<int> basis;

  void pivot(int row, int col) {
    const Rational inv = Rational(1) / a[row][col];
    for (auto& value : a[row]) value *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == Rational(0)) continue;
      const Rational factor = a[r][col];
      for (int cidx = 0; cidx <= vars; ++cidx) a[r][cidx] -= factor * a[row][cidx];
    }
    if (z[col] != Rational(0)) {
      const Rational factor = z[col];
      for (int cidx = 0; cidx <= vars; ++cidx) z[cidx] -= factor * a[row][cidx];
    }
    basis[row] = col;
  }

  void solve() {
    while (true) {
      int entering = -1;
      for (int cidx = 0; cidx < vars; ++cidx) {
        if (z[cidx] < Rational(0)) {
          entering = cidx;
          break;  // Bland: lowest index
        }
      }
      if (entering == -1) return;
      int leaving = -1;
      Rational best_ratio;
      for (int r = 0; r < rows; ++r) {
        if (a[r][entering] <= Rational(0)) continue;
        const Rational ratio = a[r][vars] / a[r][entering];
        if (leaving == -1 || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving == -1) throw std::logic_error("unbounded LP relaxation");
      pivot(leaving, entering);
    }
  }
};

}  // namespace

FractionalSolution lp_relax_2constraint(const std::vector<int>& q, const std::vector<Cost>& c,
                                        int n, Cost budget) {
  const int m = static_cast<int>(q.size());
  if (static_cast<int>(c.size()) != m) throw std::invalid_argument("q and c length mismatch");
  if (n < 0 || budget < 0) throw std::invalid_argument("negative capacity");
  for (int j = 0; j < m; ++j) {
    if (q[j] < 0 || c[j] < 0) throw std::invalid_argument("negative coefficient");
  }

  // Columns: x_0..x_{m-1}, s_robot, s_budget, u_0..u_{m-1}.
  SimplexTableau t;
  t.rows = m + 2;
  t.vars = 2 * m + 2;
  t.a.assign(t.rows, Row(static_cast<std::size_t>(t.vars) + 1, Rational(0)));
  t.z.assign(static_cast<std::size_t>(t.vars) + 1, Rational(0));
  t.basis.resize(t.rows);

  for (int j = 0; j < m; ++j) {
    t.a[0][j] = Rational(BigInt(q[j]));
    t.a[1][j] = Rational(BigInt(q[j]) * BigInt(c[j]));
    t.a[2 + j][j] = Rational(1);
    t.a[2 + j][m + 2 + j] = Rational(1);
    t.a[2 + j][t.vars] = Rational(1);
    t.z[j] = Rational(-1);
  }
  t.a[0][m] = Rational(1);
  t.a[0][t.vars] = Rational(BigInt(n));
  t.a[1][m + 1] = Rational(1);
  t.a[1][t.vars] = Rational(BigInt(budget));
  t.basis[0] = m;
  t.basis[1] = m + 1;
  for (int j = 0; j < m; ++j) t.basis[2 + j] = m + 2 + j;

  t.solve();

  FractionalSolution sol;
  sol.x.assign(static_cast<std::size_t>(m), Rational(0));
  for (int r = 0; r < t.rows; ++r) {
    if (t.basis[r] < m) sol.x[t.basis[r]] = t.a[r][t.vars];
  }
  sol.objective = t.z[t.vars];
  sol.dual_robot = t.z[m];
  sol.dual_budget = t.z[m + 1];

  // Certify optimality: primal feasibility, dual feasibility, and
  // complementary slackness must all hold exactly.
  Rational used_robots(0), used_budget(0), objective(0);
  for (int j = 0; j < m; ++j) {
    if (sol.x[j] < Rational(0) || sol.x[j] > Rational(1)) {
      throw std::logic_error("LP solution outside box");
    }
    used_robots += Rational(BigInt(q[j])) * sol.x[j];
    used_budget += Rational(BigInt(q[j]) * BigInt(c[j])) * sol.x[j];
    objective += sol.x[j];
  }
  if (used_robots > Rational(BigInt(n)) || used_budget > Rational(BigInt(budget)) ||
      objective != sol.objective) {
    throw std::logic_error("LP solution violates a constraint");
  }
  if (sol.dual_robot < Rational(0) || sol.dual_budget < Rational(0)) {
    throw std::logic_error("negative LP dual");
  }
  for (int j = 0; j < m; ++j) {
    const Rational box_dual = t.z[m + 2 + j];
    const Rational lhs = sol.dual_robot * Rational(BigInt(q[j])) +
                         sol.dual_budget * Rational(BigInt(q[j]) * BigInt(c[j])) + box_dual;
    if (box_dual < Rational(0) || lhs < Rational(1)) {
      throw std::logic_error("LP dual infeasible");
    }
    if (sol.x[j] > Rational(0) && lhs != Rational(1)) {
      throw std::logic_error("complementary slackness violated (primal)");
    }
    if (box_dual > Rational(0) && sol.x[j] != Rational(1)) {
      throw std::logic_error("complementary slackness violated (box)");
    }
  }
  if (sol.dual_robot > Rational(0) && used_robots != Rational(BigInt(n))) {
    throw std::logic_error("complementary slackness violated (robots)");
  }
  if (sol.dual_budget > Rational(0) && used_budget != Rational(BigInt(budget))) {
    throw std::logic_error("complementary slackness violated (budget)");
  }

  sol.robot_constraint_tight = used_robots == Rational(BigInt(n));
  sol.budget_constraint_tight = used_budget == Rational(BigInt(budget));
  return sol;
}

SolveReport ptas_symmetric_total(const Instance& inst, Cost total_budget, Fraction eps) {
  if (!inst.symmetric_costs) {
    throw PreconditionError("ptas requires the symmetric cost tag");
  }
  if (eps.num <= 0 || eps.den <= 0 || eps.num >= eps.den || eps.den > 64) {
    throw std::invalid_argument("eps must be a rational in (0,1) with denominator <= 64");
  }
  const int n = inst.robot_count;
  const int m = inst.task_count();
  const std::vector<Cost>& c = *inst.symmetric_costs;
  const std::vector<int>& q = inst.requirements;

  const int subset_cap = (2 * eps.den + eps.num - 1) / eps.num;  // ceil(2/eps)

  SolveReport report;
  report.solver = "ptas";
  report.assignment = Assignment::idle(n);

  // Branch A: exact over small supports. The first feasible size, scanning
  // downward, is the best one of size <= cap.
  std::vector<int> best_tasks;
  for (int k = std::min(subset_cap, m); k >= 1 && best_tasks.empty(); --k) {
    detail::for_each_subset(m, k, [&](const std::vector<int>& subset) {
      ++report.stats.subsets_examined;
      std::int64_t robots_needed = 0;
      Cost cost = 0;
      for (int j : subset) {
        robots_needed += q[j];
        cost = checked_add(cost, checked_mul(q[j], c[j]));
      }
      if (robots_needed > n || cost > total_budget) return false;
      best_tasks = subset;
      return true;
    });
  }

  // Branch B: floor a basic LP optimum; at most 2 fractional coordinates
  // are dropped, so the rounded value is within 2 of the relaxation.
  const FractionalSolution lp = lp_relax_2constraint(q, c, n, total_budget);
  std::vector<int> lp_tasks;
  for (int j = 0; j < m; ++j) {
    if (lp.x[j] == Rational(1)) lp_tasks.push_back(j);
  }

  const std::vector<int>& chosen =
      best_tasks.size() >= lp_tasks.size() ? best_tasks : lp_tasks;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int j : chosen) {
    int needed = q[j];
    for (int i = 0; i < n && needed > 0; ++i) {
      if (!used[i]) {
        used[i] = 1;
        report.assignment.task_of_robot[i] = j;
        --needed;
      }
    }
  }
  report.handled_count = static_cast<int>(chosen.size());
  return report;
}

}  // namespace mrta::approx
