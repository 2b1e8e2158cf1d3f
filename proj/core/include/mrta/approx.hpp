#ifndef MRTA_APPROX_HPP
#define MRTA_APPROX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <vector>

#include "mrta/core.hpp"
#include "mrta/solve_report.hpp"

namespace mrta::approx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

// Greedy coverage maximization: repeatedly commits the globally cheapest
// completing (task, robot set) while the cumulative cost fits the total
// budget; stops at the first violation. (q*+1)-approximation.
SolveReport greedy_total(const Instance& inst, Cost total_budget);

// Same loop with a per-set acceptance test; rejected tasks are removed and
// the scan continues, since completing costs only grow as robots deplete.
SolveReport greedy_task(const Instance& inst, Cost task_budget);

// Rewrites every cost above W to m*n*max(c) and runs the total-budget greedy
// with that value as budget; tasks whose sets touch a rewritten edge are
// dropped from the report.
SolveReport greedy_robot(const Instance& inst, Cost robot_budget);

struct SetPackingOptions {
  int max_requirement_cap = 4;  // candidate enumeration is O(n^q*)
  int swap_depth = 2;           // p-for-(p+1) exchanges with p <= swap_depth
};

// Pads every task to requirement q* with task-dedicated zero-cost dummies,
// enumerates all feasible (task + q* robots) sets, and improves a greedy
// disjoint packing by bounded local search. Approaches (q*+1)/2 as the swap
// depth grows.
SolveReport set_packing_local_search(const Instance& inst, BudgetKind kind, Cost budget,
                                     const SetPackingOptions& opts = {});

// Basic optimum of: max sum x_j  s.t.  sum q_j x_j <= n,
// sum q_j c_j x_j <= W, 0 <= x_j <= 1, over exact rationals.
struct FractionalSolution {
  std::vector<Rational> x;
  Rational objective;
  bool robot_constraint_tight = false;
  bool budget_constraint_tight = false;
  Rational dual_robot;   // multiplier of the robot-supply row
  Rational dual_budget;  // multiplier of the budget row

  int fractional_count() const;
};

FractionalSolution lp_relax_2constraint(const std::vector<int>& q, const std::vector<Cost>& c,
                                        int n, Cost budget);

// eps for the PTAS; restricted to den <= 64 to bound the exhaustive branch.
struct Fraction {
  int num = 1;
  int den = 2;
};

// Best of (a) exhaustive search over subsets of size <= ceil(2/eps) and
// (b) a rounded basic LP optimum dropping its <= 2 fractional coordinates.
// Guarantees at least (1-eps) times the optimum.
SolveReport ptas_symmetric_total(const Instance& inst, Cost total_budget, Fraction eps);

}  // namespace mrta::approx

#endif  // MRTA_APPROX_HPP
