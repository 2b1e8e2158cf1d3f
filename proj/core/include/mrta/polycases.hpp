#ifndef MRTA_POLYCASES_HPP
#define MRTA_POLYCASES_HPP

#include <optional>
#include <vector>

#include "mrta/core.hpp"
#include "mrta/solve_report.hpp"

namespace mrta::polycases {

struct CostedAssignment {
  Cost cost = 0;
  Assignment assignment;
};

// Entry k holds the minimum cost of handling exactly k tasks (with a
// witness), or nullopt when no assignment handles exactly k. Feasible
// entries are monotone nondecreasing in k.
using KCostCurve = std::vector<std::optional<CostedAssignment>>;

// Minimum total cost handling every task, via a perfect b-matching with a
// zero-cost dummy task absorbing the n - sum(q) spare robots. nullopt when
// n < sum(q).
std::optional<CostedAssignment> min_cost_handle_all(const Instance& inst);

// Symmetric + uniform, total budget: tasks sorted by cost, greedy prefix.
SolveReport solve_symmetric_uniform_total(const Instance& inst, Cost total_budget);

// Symmetric costs, per-task budget: a task is handleable iff q_j*c_j <= W;
// greedy by ascending requirement.
SolveReport solve_symmetric_task(const Instance& inst, Cost task_budget);

// Symmetric costs, per-robot budget: delete tasks with c_j > W, then run the
// per-task greedy with an artificial budget no surviving task can violate.
SolveReport solve_symmetric_robot(const Instance& inst, Cost robot_budget);

// Requires q* <= 2. Minimum-cost assignment handling exactly k tasks, by
// reduction to a minimum-weight perfect matching: each task becomes a twin
// pair joined by a zero-weight skip edge, every q_j = 1 task gets a
// dedicated zero-cost dummy robot, and n' - 2k zero-weight absorbers soak up
// the unassigned robots. A perfect matching then robot-covers exactly k twin
// pairs.
std::optional<CostedAssignment> min_cost_exactly_k_q2(const Instance& inst, int k);

KCostCurve build_k_cost_curve(const Instance& inst);

// Requires q* <= 2 and budget kind Total or PerRobot. Binary search for the
// largest k whose curve cost fits the budget; the per-robot kind first
// rewrites over-budget edges and solves with total budget n*W.
SolveReport solve_q2(const Instance& inst, const Budget& b);

}  // namespace mrta::polycases

#endif  // MRTA_POLYCASES_HPP
