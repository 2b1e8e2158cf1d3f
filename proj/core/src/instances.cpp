#include "mrta/instances.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "splitmix.hpp"

namespace mrta::instances {

using detail::SplitMix64;

namespace {

void check_config(const GeneratorConfig& cfg) {
  if (cfg.robot_count < 0 || cfg.task_count < 0) {
    throw std::invalid_argument("negative instance size");
  }
  if (cfg.max_requirement < 1) throw std::invalid_argument("max requirement below 1");
  if (cfg.cost_lo < 0 || cfg.cost_lo > cfg.cost_hi) {
    throw std::invalid_argument("invalid cost range");
  }
  if (cfg.location) {
    if (cfg.symmetric) {
      throw std::invalid_argument("location-based costs cannot be symmetric");
    }
    if (cfg.location->box < 0 || cfg.location->scale < 0) {
      throw std::invalid_argument("invalid location box or scale");
    }
  }
}

}  // namespace

Instance gen_random(const GeneratorConfig& cfg) {
  check_config(cfg);
  SplitMix64 rng(cfg.seed);
  const int n = cfg.robot_count;
  const int m = cfg.task_count;

  Instance inst;
  inst.robot_count = n;
  inst.requirements.resize(static_cast<std::size_t>(m));
  if (cfg.uniform) {
    const int q = static_cast<int>(rng.in_range(1, cfg.max_requirement));
    std::fill(inst.requirements.begin(), inst.requirements.end(), q);
    inst.uniform_requirement = q;
  } else {
    for (int j = 0; j < m; ++j) {
      inst.requirements[j] = static_cast<int>(rng.in_range(1, cfg.max_requirement));
    }
  }

  inst.costs.assign(static_cast<std::size_t>(n), std::vector<Cost>(static_cast<std::size_t>(m)));
  if (cfg.location) {
    LocationTag loc;
    loc.scale = cfg.location->scale;
    for (int i = 0; i < n; ++i) {
      loc.robot_points.push_back(
          {rng.in_range(0, cfg.location->box), rng.in_range(0, cfg.location->box)});
    }
    for (int j = 0; j < m; ++j) {
      loc.task_points.push_back(
          {rng.in_range(0, cfg.location->box), rng.in_range(0, cfg.location->box)});
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        inst.costs[i][j] =
            rounded_scaled_distance(loc.robot_points[i], loc.task_points[j], loc.scale);
      }
    }
    inst.locations = std::move(loc);
  } else if (cfg.symmetric) {
    std::vector<Cost> column(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) column[j] = rng.in_range(cfg.cost_lo, cfg.cost_hi);
    for (int i = 0; i < n; ++i) inst.costs[i] = column;
    inst.symmetric_costs = std::move(column);
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) inst.costs[i][j] = rng.in_range(cfg.cost_lo, cfg.cost_hi);
    }
  }
  return inst;
}

Instance gen_location_based(const GeneratorConfig& cfg) {
  if (!cfg.location) throw std::invalid_argument("location flag required");
  return gen_random(cfg);
}

TwoKPInstance to_2kp(const Instance& inst, Cost total_budget) {
  if (!inst.symmetric_costs) throw std::invalid_argument("to_2kp requires symmetric costs");
  TwoKPInstance kp;
  kp.capacity1 = inst.robot_count;
  kp.capacity2 = total_budget;
  for (int j = 0; j < inst.task_count(); ++j) {
    const std::int64_t q = inst.requirements[j];
    kp.items.push_back({q, checked_mul(q, (*inst.symmetric_costs)[j])});
  }
  return kp;
}

std::pair<Instance, Cost> from_2kp(const TwoKPInstance& kp) {
  for (const auto& item : kp.items) {
    if (item.size1 <= 0) {
      throw std::invalid_argument("2KP item with first dimension 0 has no counterpart task");
    }
    if (item.size2 < 0) throw std::invalid_argument("negative 2KP size");
  }
  if (kp.capacity1 < 0 || kp.capacity2 < 0) throw std::invalid_argument("negative 2KP capacity");

  bool divisible = true;
  for (const auto& item : kp.items) {
    if (item.size2 % item.size1 != 0) {
      divisible = false;
      break;
    }
  }
  std::int64_t factor = 1;
  if (!divisible) {
    for (const auto& item : kp.items) {
      factor = std::lcm(factor, item.size1);
      if (factor <= 0) throw std::overflow_error("lcm overflow in from_2kp");
    }
  }

  Instance inst;
  inst.robot_count = static_cast<int>(kp.capacity1);
  std::vector<Cost> column;
  for (const auto& item : kp.items) {
    inst.requirements.push_back(static_cast<int>(item.size1));
    column.push_back(checked_mul(item.size2, factor) / item.size1);
  }
  inst.costs.assign(static_cast<std::size_t>(inst.robot_count), column);
  inst.symmetric_costs = std::move(column);
  if (!inst.requirements.empty() &&
      std::all_of(inst.requirements.begin(), inst.requirements.end(),
                  [&](int q) { return q == inst.requirements[0]; })) {
    inst.uniform_requirement = inst.requirements[0];
  }
  return {std::move(inst), checked_mul(kp.capacity2, factor)};
}

ISReduction gen_from_independent_set(int vertex_count,
                                     const std::vector<std::pair<int, int>>& edges) {
  const int v = vertex_count;
  if (v < 0) throw std::invalid_argument("negative vertex count");
  std::vector<std::vector<bool>> adjacent(static_cast<std::size_t>(v),
                                          std::vector<bool>(static_cast<std::size_t>(v), false));
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= v || b >= v || a == b) {
      throw std::invalid_argument("bad edge in graph");
    }
    adjacent[a][b] = adjacent[b][a] = true;
  }

  ISReduction out;
  out.budget = Budget{BudgetKind::Total, 0};
  Instance& inst = out.instance;
  inst.requirements.assign(static_cast<std::size_t>(v), v);
  if (v > 0) inst.uniform_requirement = v;
  out.task_of_vertex.resize(static_cast<std::size_t>(v));
  std::iota(out.task_of_vertex.begin(), out.task_of_vertex.end(), 0);

  // Robot (i, g) is vertex i's g-th group member; for each edge (i, j) the
  // robots (i, j) and (j, i) merge into one robot cheap at both endpoints.
  for (int i = 0; i < v; ++i) {
    for (int g = 0; g < v; ++g) {
      if (adjacent[i][g] && g < i) continue;  // merged into robot (g, i)
      std::vector<Cost> row(static_cast<std::size_t>(v), 1);
      row[i] = 0;
      if (adjacent[i][g]) row[g] = 0;
      inst.costs.push_back(std::move(row));
    }
  }
  inst.robot_count = static_cast<int>(inst.costs.size());
  return out;
}

GeneratedProblem gen_from_3partition(const std::vector<std::int64_t>& numbers, int k) {
  const int size = static_cast<int>(numbers.size());
  if (k < 1 || size != 3 * k) {
    throw std::invalid_argument("3-partition needs exactly 3k numbers");
  }
  std::int64_t sum = 0;
  for (std::int64_t s : numbers) {
    if (s < 1) throw std::invalid_argument("3-partition numbers must be positive");
    sum = checked_add(sum, s);
  }
  if (sum % k != 0) throw std::invalid_argument("3-partition sum not divisible by k");

  GeneratedProblem out;
  out.budget = Budget{BudgetKind::PerTask, sum / k};
  Instance& inst = out.instance;
  inst.robot_count = size;
  inst.requirements.assign(static_cast<std::size_t>(k), 3);
  inst.uniform_requirement = 3;
  for (std::int64_t s : numbers) {
    inst.costs.emplace_back(static_cast<std::size_t>(k), s);  // row-constant costs
  }
  return out;
}

GeneratedProblem gen_bitcost(const std::vector<std::vector<bool>>& adjacency, BudgetKind kind) {
  const int n = static_cast<int>(adjacency.size());
  const int m = n == 0 ? 0 : static_cast<int>(adjacency[0].size());
  for (const auto& row : adjacency) {
    if (static_cast<int>(row.size()) != m) throw std::invalid_argument("ragged adjacency");
  }

  GeneratedProblem out;
  Instance& inst = out.instance;
  inst.robot_count = n;
  inst.requirements.assign(static_cast<std::size_t>(m), 3);
  if (m > 0) inst.uniform_requirement = 3;
  const Cost expensive = 3 * static_cast<Cost>(m) + 1;  // any value above the budget works
  for (int i = 0; i < n; ++i) {
    std::vector<Cost> row(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) row[j] = adjacency[i][j] ? 1 : expensive;
    inst.costs.push_back(std::move(row));
  }

  switch (kind) {
    case BudgetKind::Total: out.budget = {kind, 3 * static_cast<Cost>(m)}; break;
    case BudgetKind::PerTask: out.budget = {kind, 3}; break;
    case BudgetKind::PerRobot: out.budget = {kind, 1}; break;
  }
  return out;
}

}  // namespace mrta::instances
