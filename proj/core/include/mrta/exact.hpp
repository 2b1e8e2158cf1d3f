#ifndef MRTA_EXACT_HPP
#define MRTA_EXACT_HPP

#include <string>

#include "mrta/core.hpp"
#include "mrta/solve_report.hpp"

namespace mrta::exact {

// (m+1)^n enumeration is only attempted within these bounds.
struct BruteForceLimits {
  int max_robots = 9;
  int max_tasks = 6;
};

// Ground-truth oracle: enumerates every mapping robots -> tasks + idle.
// Throws CapExceededError beyond the limits.
SolveReport brute_force(const Instance& inst, const Budget& b,
                        const BruteForceLimits& limits = {});

// Scans task subsets by descending size; the first size with a b-matching of
// cost <= W is optimal because the objective only counts tasks.
SolveReport exact_total_budget(const Instance& inst, Cost total_budget);

// Branch and bound over (task, robot set) decisions. Subset scanning does
// not work here: per-task feasibility for a fixed subset is itself hard.
SolveReport exact_task_budget(const Instance& inst, Cost task_budget);

// Drops edges above the robot budget, then scans task subsets by descending
// size for one whose demands are saturable by the surviving edges.
SolveReport exact_robot_budget(const Instance& inst, Cost robot_budget);

// The integer program in LP text format (Maximize / Subject To / Binary /
// End). Variables are x_<robot>_<task> and z_<task>, 1-based.
std::string export_lp(const Instance& inst, const Budget& b);

}  // namespace mrta::exact

#endif  // MRTA_EXACT_HPP
