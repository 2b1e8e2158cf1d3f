#include "mrta/harness.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mrta/errors.hpp"
#include "mrta/exact.hpp"
#include "mrta/instances.hpp"
#include "mrta/io.hpp"
#include "mrta/polycases.hpp"
#include "splitmix.hpp"

namespace mrta::harness {

using detail::SplitMix64;

SolveReport run_solver(const std::string& name, const Instance& inst, const Budget& budget,
                       const SolverOptions& opts) {
  const auto need_kind = [&](BudgetKind kind) {
    if (budget.kind != kind) {
      throw PreconditionError("solver '" + name + "' requires a " +
                              std::string(budget_kind_name(kind)) + " budget, file has " +
                              budget_kind_name(budget.kind));
    }
  };

  if (name == "brute-force") {
    exact::BruteForceLimits limits;
    if (opts.force) limits = {INT_MAX, INT_MAX};
    return exact::brute_force(inst, budget, limits);
  }
  if (name == "exact-total") {
    need_kind(BudgetKind::Total);
    return exact::exact_total_budget(inst, budget.value);
  }
  if (name == "exact-task") {
    need_kind(BudgetKind::PerTask);
    return exact::exact_task_budget(inst, budget.value);
  }
  if (name == "exact-robot") {
    need_kind(BudgetKind::PerRobot);
    return exact::exact_robot_budget(inst, budget.value);
  }
  if (name == "symmetric-uniform") {
    need_kind(BudgetKind::Total);
    return polycases::solve_symmetric_uniform_total(inst, budget.value);
  }
  if (name == "symmetric-task") {
    need_kind(BudgetKind::PerTask);
    return polycases::solve_symmetric_task(inst, budget.value);
  }
  if (name == "symmetric-robot") {
    need_kind(BudgetKind::PerRobot);
    return polycases::solve_symmetric_robot(inst, budget.value);
  }
  if (name == "q2") {
    return polycases::solve_q2(inst, budget);
  }
  if (name == "greedy-total") {
    need_kind(BudgetKind::Total);
    return approx::greedy_total(inst, budget.value);
  }
  if (name == "greedy-task") {
    need_kind(BudgetKind::PerTask);
    return approx::greedy_task(inst, budget.value);
  }
  if (name == "greedy-robot") {
    need_kind(BudgetKind::PerRobot);
    return approx::greedy_robot(inst, budget.value);
  }
  if (name == "set-packing") {
    approx::SetPackingOptions sp;
    sp.swap_depth = opts.swap_depth;
    if (opts.force) sp.max_requirement_cap = std::max(sp.max_requirement_cap, inst.max_requirement());
    return approx::set_packing_local_search(inst, budget.kind, budget.value, sp);
  }
  if (name == "ptas") {
    need_kind(BudgetKind::Total);
    return approx::ptas_symmetric_total(inst, budget.value, opts.eps);
  }
  throw std::invalid_argument("unknown solver '" + name + "'");
}

const std::vector<std::string>& solver_names() {
  static const std::vector<std::string> names = {
      "brute-force",   "exact-total",    "exact-task",      "exact-robot",
      "symmetric-uniform", "symmetric-task", "symmetric-robot", "q2",
      "greedy-total",  "greedy-task",    "greedy-robot",    "set-packing",
      "ptas"};
  return names;
}

namespace {

std::string format_ratio(int exact_count, int count) {
  if (count == 0 && exact_count == 0) return "1.0000";
  if (count == 0) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f",
                static_cast<double>(exact_count) / static_cast<double>(count));
  return buf;
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<NamedInstance>& corpus,
                                const std::vector<std::string>& solvers, bool with_timing,
                                const SolverOptions& opts) {
  for (const std::string& solver : solvers) {
    const auto& known = solver_names();
    if (std::find(known.begin(), known.end(), solver) == known.end()) {
      throw std::invalid_argument("unknown solver '" + solver + "'");
    }
  }

  std::vector<const NamedInstance*> order;
  order.reserve(corpus.size());
  for (const auto& item : corpus) order.push_back(&item);
  std::stable_sort(order.begin(), order.end(),
                   [](const NamedInstance* a, const NamedInstance* b) { return a->id < b->id; });

  std::vector<BenchRow> rows;
  for (const NamedInstance* item : order) {
    struct Outcome {
      bool ran = false;
      SolveReport report;
      std::int64_t micros = 0;
    };
    std::vector<Outcome> outcomes(solvers.size());
    std::optional<int> exact_count;
    for (std::size_t s = 0; s < solvers.size(); ++s) {
      const auto start = std::chrono::steady_clock::now();
      try {
        outcomes[s].report = run_solver(solvers[s], item->instance, item->budget, opts);
        outcomes[s].ran = true;
      } catch (const PreconditionError&) {
        outcomes[s].ran = false;
      }
      const auto stop = std::chrono::steady_clock::now();
      outcomes[s].micros =
          std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
      if (outcomes[s].ran && outcomes[s].report.optimal && !exact_count) {
        exact_count = outcomes[s].report.handled_count;
      }
    }
    for (std::size_t s = 0; s < solvers.size(); ++s) {
      BenchRow row;
      row.id = item->id;
      row.n = item->instance.robot_count;
      row.m = item->instance.task_count();
      row.qstar = item->instance.max_requirement();
      row.kind = budget_kind_name(item->budget.kind);
      row.budget = item->budget.value;
      row.solver = solvers[s];
      if (!outcomes[s].ran) {
        row.count = "skipped";
        row.optimal = "-";
        row.micros = 0;
        row.ratio = "";
      } else {
        row.count = std::to_string(outcomes[s].report.handled_count);
        row.optimal = outcomes[s].report.optimal ? "true" : "false";
        row.micros = with_timing ? outcomes[s].micros : 0;
        row.ratio = exact_count ? format_ratio(*exact_count, outcomes[s].report.handled_count)
                                : "";
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "id,n,m,qstar,kind,W,solver,count,optimal,micros,ratio\n";
  for (const BenchRow& r : rows) {
    out << r.id << "," << r.n << "," << r.m << "," << r.qstar << "," << r.kind << ","
        << r.budget << "," << r.solver << "," << r.count << "," << r.optimal << ","
        << r.micros << "," << r.ratio << "\n";
  }
  return out.str();
}

std::optional<std::string> check_approx_report(const Instance& inst, const Budget& budget,
                                               const SolveReport& report, int exact_count,
                                               int ratio_num, int ratio_den) {
  const Evaluation ev = evaluate(inst, report.assignment);
  if (ev.handled_count != report.handled_count) {
    return "witness reproduces " + std::to_string(ev.handled_count) + " tasks, report claims " +
           std::to_string(report.handled_count);
  }
  if (!is_feasible(inst, budget, report.assignment)) {
    return "witness of '" + report.solver + "' violates the " +
           std::string(budget_kind_name(budget.kind)) + " budget";
  }
  if (static_cast<std::int64_t>(ratio_num) * report.handled_count <
      static_cast<std::int64_t>(ratio_den) * exact_count) {
    return "ratio bound violated: " + std::to_string(ratio_num) + "/" +
           std::to_string(ratio_den) + " * " + std::to_string(report.handled_count) +
           " < " + std::to_string(exact_count) + " (" + report.solver + ")";
  }
  return std::nullopt;
}

namespace {

// --- verification oracles, deliberately independent of the solvers ---

int independence_number(int v, const std::vector<std::pair<int, int>>& edges) {
  int best = 0;
  for (int mask = 0; mask < (1 << v); ++mask) {
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

bool three_partition_exists(std::vector<std::int64_t> numbers, int k, std::int64_t target) {
  std::sort(numbers.begin(), numbers.end(), std::greater<>());
  std::vector<std::int64_t> room(static_cast<std::size_t>(k), target);
  std::vector<int> slots(static_cast<std::size_t>(k), 3);
  const std::function<bool(std::size_t)> place = [&](std::size_t idx) {
    if (idx == numbers.size()) return true;
    for (int b = 0; b < k; ++b) {
      if (slots[b] == 0 || room[b] < numbers[idx]) continue;
      room[b] -= numbers[idx];
      --slots[b];
      if (place(idx + 1)) return true;
      room[b] += numbers[idx];
      ++slots[b];
      if (room[b] == target) break;  // empty buckets are interchangeable
    }
    return false;
  };
  return place(0);
}

int two_kp_optimum(const instances::TwoKPInstance& kp) {
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

// Minimum cost over assignments handling every task, by full enumeration.
std::optional<Cost> min_cost_all_by_enumeration(const Instance& inst) {
  const int n = inst.robot_count;
  const int m = inst.task_count();
  std::vector<int> choice(static_cast<std::size_t>(n), -1);
  std::optional<Cost> best;
  while (true) {
    std::vector<int> assigned(static_cast<std::size_t>(m), 0);
    Cost cost = 0;
    for (int i = 0; i < n; ++i) {
      if (choice[i] >= 0) {
        ++assigned[choice[i]];
        cost += inst.costs[i][choice[i]];
      }
    }
    bool all = true;
    for (int j = 0; j < m; ++j) {
      if (assigned[j] < inst.requirements[j]) {
        all = false;
        break;
      }
    }
    if (all && (!best || cost < *best)) best = cost;

    int i = 0;
    while (i < n && choice[i] == m - 1) choice[i++] = -1;
    if (i == n) break;
    ++choice[i];
  }
  return best;
}

struct VerifyContext {
  SplitMix64 rng;
  VerifyResult result;

  explicit VerifyContext(std::uint64_t seed) : rng(seed) {}

  void check(const std::string& family, const Instance& inst, const Budget& budget,
             const std::optional<std::string>& failure) {
    ++result.checks_run;
    if (failure) {
      result.failures.push_back({family, *failure, io::serialize_instance(inst, budget)});
    }
  }

  instances::GeneratorConfig small_config(int max_n, int max_m, int q_max, Cost cost_hi) {
    instances::GeneratorConfig cfg;
    cfg.seed = rng.next();
    cfg.robot_count = static_cast<int>(rng.in_range(1, max_n));
    cfg.task_count = static_cast<int>(rng.in_range(1, max_m));
    cfg.cost_lo = 0;
    cfg.cost_hi = cost_hi;
    cfg.max_requirement = q_max;
    return cfg;
  }

  Budget draw_budget(const Instance& inst, BudgetKind kind) {
    Cost max_cost = 0;
    for (const auto& row : inst.costs) {
      for (Cost c : row) max_cost = std::max(max_cost, c);
    }
    Cost hi = 0;
    switch (kind) {
      case BudgetKind::Total:
        hi = max_cost * std::max(1, inst.robot_count);
        break;
      case BudgetKind::PerTask:
        hi = max_cost * std::max(1, inst.max_requirement());
        break;
      case BudgetKind::PerRobot:
        hi = max_cost;
        break;
    }
    return {kind, rng.in_range(0, std::max<Cost>(hi, 1))};
  }
};

void verify_exact(VerifyContext& ctx) {
  const auto inst = instances::gen_random(ctx.small_config(7, 4, 3, 9));
  for (BudgetKind kind : {BudgetKind::Total, BudgetKind::PerTask, BudgetKind::PerRobot}) {
    const Budget budget = ctx.draw_budget(inst, kind);
    const int oracle = exact::brute_force(inst, budget).handled_count;
    SolveReport report;
    switch (kind) {
      case BudgetKind::Total: report = exact::exact_total_budget(inst, budget.value); break;
      case BudgetKind::PerTask: report = exact::exact_task_budget(inst, budget.value); break;
      case BudgetKind::PerRobot: report = exact::exact_robot_budget(inst, budget.value); break;
    }
    std::optional<std::string> failure;
    if (report.handled_count != oracle) {
      failure = report.solver + " found " + std::to_string(report.handled_count) +
                ", oracle found " + std::to_string(oracle);
    } else {
      failure = check_approx_report(inst, budget, report, oracle, 1, 1);
    }
    ctx.check("exact", inst, budget, failure);
  }
}

void verify_polycases(VerifyContext& ctx) {
  // symmetric + uniform, total budget
  {
    auto cfg = ctx.small_config(7, 4, 3, 9);
    cfg.symmetric = true;
    cfg.uniform = true;
    const auto inst = instances::gen_random(cfg);
    const Budget budget = ctx.draw_budget(inst, BudgetKind::Total);
    const int oracle = exact::brute_force(inst, budget).handled_count;
    const auto report = polycases::solve_symmetric_uniform_total(inst, budget.value);
    std::optional<std::string> failure;
    if (report.handled_count != oracle) {
      failure = "symmetric-uniform found " + std::to_string(report.handled_count) +
                ", oracle found " + std::to_string(oracle);
    }
    ctx.check("polycases", inst, budget, failure);
  }
  // symmetric, per-task and per-robot budgets
  {
    auto cfg = ctx.small_config(7, 4, 3, 9);
    cfg.symmetric = true;
    const auto inst = instances::gen_random(cfg);
    for (BudgetKind kind : {BudgetKind::PerTask, BudgetKind::PerRobot}) {
      const Budget budget = ctx.draw_budget(inst, kind);
      const int oracle = exact::brute_force(inst, budget).handled_count;
      const auto report = kind == BudgetKind::PerTask
                              ? polycases::solve_symmetric_task(inst, budget.value)
                              : polycases::solve_symmetric_robot(inst, budget.value);
      std::optional<std::string> failure;
      if (report.handled_count != oracle) {
        failure = report.solver + " found " + std::to_string(report.handled_count) +
                  ", oracle found " + std::to_string(oracle);
      }
      ctx.check("polycases", inst, budget, failure);
    }
  }
  // minimum cost handling everything
  {
    auto cfg = ctx.small_config(6, 3, 2, 9);
    const auto inst = instances::gen_random(cfg);
    const auto got = polycases::min_cost_handle_all(inst);
    const auto want = min_cost_all_by_enumeration(inst);
    std::optional<std::string> failure;
    if (got.has_value() != want.has_value()) {
      failure = "handle-all feasibility mismatch";
    } else if (got && got->cost != *want) {
      failure = "handle-all cost " + std::to_string(got->cost) + ", oracle " +
                std::to_string(*want);
    } else if (got && evaluate(inst, got->assignment).handled_count != inst.task_count()) {
      failure = "handle-all witness does not handle every task";
    }
    ctx.check("polycases", inst, Budget{BudgetKind::Total, got ? got->cost : 0}, failure);
  }
}

void verify_q2(VerifyContext& ctx) {
  const auto inst = instances::gen_random(ctx.small_config(7, 4, 2, 9));
  for (BudgetKind kind : {BudgetKind::Total, BudgetKind::PerRobot}) {
    const Budget budget = ctx.draw_budget(inst, kind);
    const int oracle = exact::brute_force(inst, budget).handled_count;
    const auto report = polycases::solve_q2(inst, budget);
    std::optional<std::string> failure;
    if (report.handled_count != oracle) {
      failure = "q2 found " + std::to_string(report.handled_count) + ", oracle found " +
                std::to_string(oracle);
    } else {
      failure = check_approx_report(inst, budget, report, oracle, 1, 1);
    }
    ctx.check("q2", inst, budget, failure);
  }
  // curve monotone over feasible entries
  const auto curve = polycases::build_k_cost_curve(inst);
  std::optional<std::string> failure;
  for (std::size_t k = 1; k < curve.size(); ++k) {
    if (curve[k] && !curve[k - 1]) {
      failure = "curve feasible at " + std::to_string(k) + " but not at " + std::to_string(k - 1);
    } else if (curve[k] && curve[k - 1] && curve[k]->cost < curve[k - 1]->cost) {
      failure = "curve cost decreases at k = " + std::to_string(k);
    }
  }
  ctx.check("q2", inst, Budget{BudgetKind::Total, 0}, failure);
}

void verify_ratios(VerifyContext& ctx) {
  const auto inst = instances::gen_random(ctx.small_config(7, 4, 3, 9));
  const int q_star_plus_1 = inst.max_requirement() + 1;
  for (BudgetKind kind : {BudgetKind::Total, BudgetKind::PerTask, BudgetKind::PerRobot}) {
    const Budget budget = ctx.draw_budget(inst, kind);
    const int oracle = exact::brute_force(inst, budget).handled_count;
    SolveReport report;
    switch (kind) {
      case BudgetKind::Total: report = approx::greedy_total(inst, budget.value); break;
      case BudgetKind::PerTask: report = approx::greedy_task(inst, budget.value); break;
      case BudgetKind::PerRobot: report = approx::greedy_robot(inst, budget.value); break;
    }
    ctx.check("ratios", inst, budget,
              check_approx_report(inst, budget, report, oracle, q_star_plus_1, 1));
  }
  for (BudgetKind kind : {BudgetKind::PerTask, BudgetKind::PerRobot}) {
    const Budget budget = ctx.draw_budget(inst, kind);
    const int oracle = exact::brute_force(inst, budget).handled_count;
    const auto report = approx::set_packing_local_search(inst, kind, budget.value);
    ctx.check("ratios", inst, budget,
              check_approx_report(inst, budget, report, oracle, (q_star_plus_1 + 1) / 2, 1));
  }
  {
    auto cfg = ctx.small_config(7, 4, 3, 9);
    cfg.symmetric = true;
    const auto sym = instances::gen_random(cfg);
    const Budget budget = ctx.draw_budget(sym, BudgetKind::Total);
    const int oracle = exact::brute_force(sym, budget).handled_count;
    for (int den : {2, 3, 4}) {
      const auto report = approx::ptas_symmetric_total(sym, budget.value, {1, den});
      std::optional<std::string> failure =
          check_approx_report(sym, budget, report, 0, 1, 1);  // feasibility only
      if (!failure &&
          static_cast<std::int64_t>(den) * report.handled_count <
              static_cast<std::int64_t>(den - 1) * oracle) {
        failure = "ptas(1/" + std::to_string(den) + ") found " +
                  std::to_string(report.handled_count) + " against optimum " +
                  std::to_string(oracle);
      }
      ctx.check("ratios", sym, budget, failure);
    }
  }
}

void verify_is_reduction(VerifyContext& ctx) {
  const int v = static_cast<int>(ctx.rng.in_range(1, 5));
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      if (ctx.rng.chance(1, 2)) edges.push_back({a, b});
    }
  }
  const auto reduction = instances::gen_from_independent_set(v, edges);
  const int alpha = independence_number(v, edges);
  const auto report = exact::exact_total_budget(reduction.instance, reduction.budget.value);
  std::optional<std::string> failure;
  if (reduction.instance.robot_count != v * v - static_cast<int>(edges.size())) {
    failure = "robot count is not |V|^2 - |E|";
  } else if (report.handled_count != alpha) {
    failure = "reduction optimum " + std::to_string(report.handled_count) +
              ", independence number " + std::to_string(alpha);
  }
  ctx.check("is-reduction", reduction.instance, reduction.budget, failure);
}

void verify_3partition(VerifyContext& ctx) {
  const int k = static_cast<int>(ctx.rng.in_range(1, 3));
  std::vector<std::int64_t> numbers;
  std::int64_t sum = 0;
  for (int i = 0; i < 3 * k; ++i) {
    numbers.push_back(ctx.rng.in_range(1, 6));
    sum += numbers.back();
  }
  if (sum % k != 0) {
    const std::int64_t bump = k - sum % k;  // keep the sum divisible by k
    numbers.back() += bump;
    sum += bump;
  }
  const auto problem = instances::gen_from_3partition(numbers, k);
  const bool partition = three_partition_exists(numbers, k, sum / k);
  const auto report = exact::exact_task_budget(problem.instance, problem.budget.value);
  std::optional<std::string> failure;
  if ((report.handled_count == k) != partition) {
    failure = std::string("3-partition ") + (partition ? "exists" : "does not exist") +
              " but solver handled " + std::to_string(report.handled_count) + " of " +
              std::to_string(k);
  }
  ctx.check("3partition", problem.instance, problem.budget, failure);
}

void verify_2kp(VerifyContext& ctx) {
  auto cfg = ctx.small_config(7, 4, 3, 9);
  cfg.symmetric = true;
  const auto inst = instances::gen_random(cfg);
  const Budget budget = ctx.draw_budget(inst, BudgetKind::Total);
  const auto kp = instances::to_2kp(inst, budget.value);
  const auto [back, back_budget] = instances::from_2kp(kp);

  const int direct = exact::exact_total_budget(inst, budget.value).handled_count;
  const int round_trip = exact::exact_total_budget(back, back_budget).handled_count;
  const int kp_opt = two_kp_optimum(kp);
  std::optional<std::string> failure;
  if (direct != round_trip) {
    failure = "round trip changed the optimum: " + std::to_string(direct) + " vs " +
              std::to_string(round_trip);
  } else if (direct != kp_opt) {
    failure = "knapsack optimum " + std::to_string(kp_opt) + ", allocation optimum " +
              std::to_string(direct);
  }
  ctx.check("2kp", inst, budget, failure);
}

}  // namespace

const std::vector<std::string>& verify_families() {
  static const std::vector<std::string> families = {
      "exact", "polycases", "q2", "ratios", "is-reduction", "3partition", "2kp", "all"};
  return families;
}

VerifyResult run_verify(const std::string& family, int trials, std::uint64_t seed) {
  const auto& known = verify_families();
  if (std::find(known.begin(), known.end(), family) == known.end()) {
    throw std::invalid_argument("unknown verify family '" + family + "'");
  }
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");

  VerifyContext ctx(seed);
  for (int t = 0; t < trials; ++t) {
    if (family == "exact" || family == "all") verify_exact(ctx);
    if (family == "polycases" || family == "all") verify_polycases(ctx);
    if (family == "q2" || family == "all") verify_q2(ctx);
    if (family == "ratios" || family == "all") verify_ratios(ctx);
    if (family == "is-reduction" || family == "all") verify_is_reduction(ctx);
    if (family == "3partition" || family == "all") verify_3partition(ctx);
    if (family == "2kp" || family == "all") verify_2kp(ctx);
  }
  return ctx.result;
}

}  // namespace mrta::harness
