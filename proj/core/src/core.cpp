#include "mrta/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mrta {

int Instance::max_requirement() const {
  int q_star = 0;
  for (int q : requirements) q_star = std::max(q_star, q);
  return q_star;
}

const char* budget_kind_name(BudgetKind kind) {
  switch (kind) {
    case BudgetKind::Total: return "total";
    case BudgetKind::PerTask: return "per-task";
    case BudgetKind::PerRobot: return "per-robot";
  }
  return "?";
}

std::optional<BudgetKind> budget_kind_from_name(const std::string& name) {
  if (name == "total") return BudgetKind::Total;
  if (name == "per-task") return BudgetKind::PerTask;
  if (name == "per-robot") return BudgetKind::PerRobot;
  return std::nullopt;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in multiply");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in add");
  return out;
}

namespace {

// floor(sqrt(x)) for x >= 0.
std::int64_t isqrt_floor(std::int64_t x) {
  if (x < 0) throw std::invalid_argument("isqrt of negative");
  std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

Cost rounded_scaled_distance(const Point& a, const Point& b, std::int64_t scale) {
  if (scale < 0) throw std::invalid_argument("negative distance scale");
  const std::int64_t dx = a.x - b.x;
  const std::int64_t dy = a.y - b.y;
  const std::int64_t d2 = checked_add(checked_mul(dx, dx), checked_mul(dy, dy));
  const std::int64_t scaled2 = checked_mul(checked_mul(scale, scale), d2);
  // round-half-up of sqrt(scaled2): round up iff 4*scaled2 >= (2s+1)^2.
  // (2s+1)^2 is odd and 4*scaled2 even, so the tie never occurs.
  const std::int64_t s = isqrt_floor(scaled2);
  const std::int64_t half_test = checked_mul(2 * s + 1, 2 * s + 1);
  return (checked_mul(4, scaled2) >= half_test) ? s + 1 : s;
}

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> violations;
  const int n = inst.robot_count;
  const int m = inst.task_count();

  if (n < 0) violations.push_back("robot count below 0");
  if (static_cast<int>(inst.costs.size()) != n) {
    violations.push_back("cost matrix has " + std::to_string(inst.costs.size()) +
                         " rows, expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < inst.costs.size(); ++i) {
    if (static_cast<int>(inst.costs[i].size()) != m) {
      violations.push_back("cost row " + std::to_string(i + 1) + " has " +
                           std::to_string(inst.costs[i].size()) + " entries, expected " +
                           std::to_string(m));
    }
  }
  const bool shape_ok = violations.empty();

  for (int j = 0; j < m; ++j) {
    if (inst.requirements[j] < 1) {
      violations.push_back("requirement below 1 for task " + std::to_string(j + 1));
    }
  }
  if (shape_ok) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        if (inst.costs[i][j] < 0) {
          violations.push_back("negative cost at robot " + std::to_string(i + 1) + ", task " +
                               std::to_string(j + 1));
        }
      }
    }
  }

  if (inst.symmetric_costs) {
    if (static_cast<int>(inst.symmetric_costs->size()) != m) {
      violations.push_back("symmetric tag has wrong length");
    } else if (shape_ok) {
      for (int j = 0; j < m; ++j) {
        for (int i = 0; i < n; ++i) {
          if (inst.costs[i][j] != (*inst.symmetric_costs)[j]) {
            violations.push_back("symmetric tag false at robot " + std::to_string(i + 1) +
                                 ", task " + std::to_string(j + 1));
            i = n;  // one report per column is enough
          }
        }
      }
    }
  }

  if (inst.uniform_requirement) {
    for (int j = 0; j < m; ++j) {
      if (inst.requirements[j] != *inst.uniform_requirement) {
        violations.push_back("uniform tag false at task " + std::to_string(j + 1));
        break;
      }
    }
  }

  if (inst.locations) {
    const LocationTag& loc = *inst.locations;
    if (static_cast<int>(loc.robot_points.size()) != n ||
        static_cast<int>(loc.task_points.size()) != m) {
      violations.push_back("location tag has wrong point counts");
    } else if (loc.scale < 0) {
      violations.push_back("location tag has negative scale");
    } else if (shape_ok) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
          const Cost want = rounded_scaled_distance(loc.robot_points[i], loc.task_points[j], loc.scale);
          if (inst.costs[i][j] != want) {
            violations.push_back("location tag false at robot " + std::to_string(i + 1) +
                                 ", task " + std::to_string(j + 1) + " (expected " +
                                 std::to_string(want) + ", found " +
                                 std::to_string(inst.costs[i][j]) + ")");
          }
        }
      }
    }
  }

  return violations;
}

Evaluation evaluate(const Instance& inst, const Assignment& a) {
  const int n = inst.robot_count;
  const int m = inst.task_count();
  if (a.robot_count() != n) throw std::invalid_argument("assignment length != robot count");

  Evaluation ev;
  ev.handled.assign(static_cast<std::size_t>(m), false);
  ev.per_task_cost.assign(static_cast<std::size_t>(m), 0);
  ev.per_robot_cost.assign(static_cast<std::size_t>(n), 0);

  std::vector<int> assigned(static_cast<std::size_t>(m), 0);
  std::vector<Cost> raw_task_cost(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < n; ++i) {
    const int j = a.task_of_robot[i];
    if (j == Assignment::kIdle) continue;
    if (j < 0 || j >= m) throw std::invalid_argument("assignment task index out of range");
    ++assigned[j];
    const Cost c = inst.costs[i][j];
    raw_task_cost[j] += c;
    ev.per_robot_cost[i] = c;
    ev.total_cost += c;
  }
  for (int j = 0; j < m; ++j) {
    if (assigned[j] >= inst.requirements[j]) {
      ev.handled[j] = true;
      ++ev.handled_count;
      ev.per_task_cost[j] = raw_task_cost[j];
    }
  }
  return ev;
}

bool is_feasible(const Instance& inst, const Budget& b, const Assignment& a) {
  const Evaluation ev = evaluate(inst, a);
  switch (b.kind) {
    case BudgetKind::Total:
      return ev.total_cost <= b.value;
    case BudgetKind::PerTask:
      for (int j = 0; j < inst.task_count(); ++j) {
        if (ev.handled[j] && ev.per_task_cost[j] > b.value) return false;
      }
      return true;
    case BudgetKind::PerRobot:
      for (Cost c : ev.per_robot_cost) {
        if (c > b.value) return false;
      }
      return true;
  }
  return false;
}

Instance restrict_by_robot_budget(const Instance& inst, Cost robot_budget) {
  if (robot_budget < 0) throw std::invalid_argument("negative robot budget");
  const Cost blocked = checked_add(checked_mul(inst.robot_count, robot_budget), 1);

  Instance out = inst;
  bool changed = false;
  for (auto& row : out.costs) {
    for (Cost& c : row) {
      if (c > robot_budget) {
        c = blocked;
        changed = true;
      }
    }
  }
  if (out.symmetric_costs) {
    for (Cost& c : *out.symmetric_costs) {
      if (c > robot_budget) c = blocked;
    }
  }
  if (changed && out.locations) out.locations.reset();
  return out;
}

}  // namespace mrta
