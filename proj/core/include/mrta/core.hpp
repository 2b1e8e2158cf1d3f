#ifndef MRTA_CORE_HPP
#define MRTA_CORE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mrta {

// Costs are nonnegative 64-bit integers so budget comparisons are exact.
using Cost = std::int64_t;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Declares that costs[i][j] equals the fixed-point-rounded Euclidean
// distance between robot_points[i] and task_points[j] at `scale`.
struct LocationTag {
  std::vector<Point> robot_points;
  std::vector<Point> task_points;
  std::int64_t scale = 1;
};

// An allocation problem: n robots, m tasks, task j needs at least
// requirements[j] robots, and sending robot i to task j costs costs[i][j].
//
// The three structure tags are declarations, not derived facts; a tag may be
// absent even when the matrix happens to have the structure, and
// validate_instance() checks every present tag against the data.
struct Instance {
  int robot_count = 0;                     // n
  std::vector<int> requirements;           // q_j, one per task
  std::vector<std::vector<Cost>> costs;    // costs[robot][task], n rows

  std::optional<std::vector<Cost>> symmetric_costs;  // c_j, same for every robot
  std::optional<int> uniform_requirement;            // common q
  std::optional<LocationTag> locations;

  int task_count() const { return static_cast<int>(requirements.size()); }

  // q* = max_j q_j; 0 when there are no tasks.
  int max_requirement() const;

  Cost cost(int robot, int task) const { return costs[robot][task]; }
};

enum class BudgetKind { Total, PerTask, PerRobot };

struct Budget {
  BudgetKind kind = BudgetKind::Total;
  Cost value = 0;  // W, >= 0
};

const char* budget_kind_name(BudgetKind kind);  // "total" / "per-task" / "per-robot"
std::optional<BudgetKind> budget_kind_from_name(const std::string& name);

// A partial map robot -> task. The vector representation makes the
// one-task-per-robot constraint structurally unviolable.
struct Assignment {
  static constexpr int kIdle = -1;

  std::vector<int> task_of_robot;  // kIdle or a task index, one entry per robot

  static Assignment idle(int robot_count) {
    return Assignment{std::vector<int>(static_cast<std::size_t>(robot_count), kIdle)};
  }

  int robot_count() const { return static_cast<int>(task_of_robot.size()); }

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Cost/coverage breakdown of an assignment.
//
// A task with assigned robots but fewer than q_j of them is unhandled; those
// robots still pay into total_cost and per_robot_cost, but the task's
// per_task_cost stays 0 (the per-task budget binds handled tasks only).
struct Evaluation {
  std::vector<bool> handled;         // z_j
  int handled_count = 0;
  Cost total_cost = 0;
  std::vector<Cost> per_task_cost;   // 0 for unhandled tasks
  std::vector<Cost> per_robot_cost;  // 0 for idle robots
};

// Returns one message per violated invariant; empty means the instance is valid.
std::vector<std::string> validate_instance(const Instance& inst);

// Throws std::invalid_argument when the assignment's length or task indices
// do not fit the instance.
Evaluation evaluate(const Instance& inst, const Assignment& a);

bool is_feasible(const Instance& inst, const Budget& b, const Assignment& a);

// Copy of `inst` where every cost above W is replaced by n*W + 1, so that a
// total budget of n*W forbids exactly those edges. Structure tags are
// recomputed: symmetric costs stay symmetric (per-column substitution), the
// location tag survives only if no entry changed.
Instance restrict_by_robot_budget(const Instance& inst, Cost robot_budget);

// round(scale * euclidean_distance(a, b)) computed in pure integer
// arithmetic, rounding half up. Shared by the location generator and by
// validate_instance so the two can never disagree.
Cost rounded_scaled_distance(const Point& a, const Point& b, std::int64_t scale);

// a*b with overflow detection; throws std::overflow_error.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace mrta

#endif  // MRTA_CORE_HPP
