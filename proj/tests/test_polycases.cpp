#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "mrta/errors.hpp"
#include "mrta/exact.hpp"
#include "mrta/instances.hpp"
#include "mrta/polycases.hpp"
#include "oracles.hpp"
#include "splitmix.hpp"

using namespace mrta;

namespace {

Instance symmetric_instance(int robots, std::vector<int> q, std::vector<Cost> c) {
  Instance inst;
  inst.robot_count = robots;
  inst.requirements = std::move(q);
  inst.costs.assign(static_cast<std::size_t>(robots), c);
  inst.symmetric_costs = std::move(c);
  return inst;
}

Instance q2_example() {
  Instance inst;
  inst.robot_count = 3;
  inst.requirements = {2, 1};
  inst.costs = {{1, 9}, {2, 9}, {9, 1}};
  return inst;
}

instances::GeneratorConfig small_cfg(detail::SplitMix64& rng, int max_n, int max_m, int q_max) {
  instances::GeneratorConfig cfg;
  cfg.seed = rng.next();
  cfg.robot_count = static_cast<int>(rng.in_range(1, max_n));
  cfg.task_count = static_cast<int>(rng.in_range(1, max_m));
  cfg.cost_hi = 7;
  cfg.max_requirement = q_max;
  return cfg;
}

}  // namespace

TEST_CASE("min cost handling all tasks") {
  Instance inst;
  inst.robot_count = 3;
  inst.requirements = {1, 2};
  inst.costs = {{1, 4}, {2, 3}, {5, 3}};
  const auto result = polycases::min_cost_handle_all(inst);
  REQUIRE(result.has_value());
  CHECK(result->cost == 7);  // frozen from enumeration
  CHECK(result->cost == *oracles::min_cost_handle_all(inst));
  CHECK(evaluate(inst, result->assignment).handled_count == 2);

  Instance empty;
  empty.robot_count = 2;
  empty.costs.assign(2, {});
  const auto trivial = polycases::min_cost_handle_all(empty);
  REQUIRE(trivial.has_value());
  CHECK(trivial->cost == 0);
  CHECK(trivial->assignment == Assignment::idle(2));

  Instance deficit;
  deficit.robot_count = 2;
  deficit.requirements = {3};
  deficit.costs = {{1}, {1}};
  CHECK(!polycases::min_cost_handle_all(deficit).has_value());
}

TEST_CASE("symmetric uniform total greedy") {
  Instance inst = symmetric_instance(4, {2, 2, 2}, {1, 2, 3});
  inst.uniform_requirement = 2;
  const auto report = polycases::solve_symmetric_uniform_total(inst, 7);
  CHECK(report.handled_count == 2);  // c=1 and c=2 tasks; robots exhausted
  CHECK(report.optimal);
  CHECK(exact::brute_force(inst, {BudgetKind::Total, 7}).handled_count == 2);

  CHECK(polycases::solve_symmetric_uniform_total(inst, 0).handled_count == 0);

  Instance free_tasks = symmetric_instance(2, {1, 1}, {0, 0});
  free_tasks.uniform_requirement = 1;
  CHECK(polycases::solve_symmetric_uniform_total(free_tasks, 0).handled_count == 2);
}

TEST_CASE("symmetric uniform solver requires both tags") {
  Instance no_uniform = symmetric_instance(4, {1, 2}, {1, 1});
  CHECK_THROWS_AS(polycases::solve_symmetric_uniform_total(no_uniform, 5), PreconditionError);

  Instance no_symmetric;
  no_symmetric.robot_count = 2;
  no_symmetric.requirements = {1, 1};
  no_symmetric.costs = {{1, 2}, {2, 1}};
  no_symmetric.uniform_requirement = 1;
  CHECK_THROWS_AS(polycases::solve_symmetric_uniform_total(no_symmetric, 5), PreconditionError);
}

TEST_CASE("symmetric per-task greedy on the first example data") {
  const Instance inst = oracles::example1();
  const auto report = polycases::solve_symmetric_task(inst, 100);
  CHECK(report.handled_count == 2);  // t1 then t2; robots run out before t3
  CHECK(report.handled_count ==
        oracles::best_count_by_enumeration(inst, {BudgetKind::PerTask, 100}));

  CHECK(polycases::solve_symmetric_task(symmetric_instance(4, {1, 1}, {9, 9}), 8).handled_count ==
        0);
  CHECK(polycases::solve_symmetric_task(symmetric_instance(2, {1, 1}, {5, 5}), 5).handled_count ==
        2);
}

TEST_CASE("symmetric per-robot greedy") {
  const auto one = polycases::solve_symmetric_robot(symmetric_instance(2, {1, 1}, {3, 9}), 5);
  CHECK(one.handled_count == 1);
  CHECK(evaluate(symmetric_instance(2, {1, 1}, {3, 9}), one.assignment).handled[0]);

  CHECK(polycases::solve_symmetric_robot(symmetric_instance(2, {1, 1}, {6, 9}), 5).handled_count ==
        0);
}

TEST_CASE("polycase solvers equal brute force on in-domain instances") {
  detail::SplitMix64 rng(404);
  for (int trial = 0; trial < 50; ++trial) {
    auto cfg = small_cfg(rng, 6, 4, 3);
    cfg.symmetric = true;
    cfg.uniform = true;
    const Instance uni = instances::gen_random(cfg);
    const Cost wt = rng.in_range(0, 25);
    CHECK(polycases::solve_symmetric_uniform_total(uni, wt).handled_count ==
          exact::brute_force(uni, {BudgetKind::Total, wt}).handled_count);

    auto cfg2 = small_cfg(rng, 6, 4, 3);
    cfg2.symmetric = true;
    const Instance sym = instances::gen_random(cfg2);
    const Cost wk = rng.in_range(0, 15);
    CHECK(polycases::solve_symmetric_task(sym, wk).handled_count ==
          exact::brute_force(sym, {BudgetKind::PerTask, wk}).handled_count);
    const Cost wr = rng.in_range(0, 7);
    CHECK(polycases::solve_symmetric_robot(sym, wr).handled_count ==
          exact::brute_force(sym, {BudgetKind::PerRobot, wr}).handled_count);
  }
}

TEST_CASE("q2 gadget on the worked example") {
  const Instance inst = q2_example();
  const auto k2 = polycases::min_cost_exactly_k_q2(inst, 2);
  REQUIRE(k2.has_value());
  CHECK(k2->cost == 4);  // frozen from enumeration
  CHECK(k2->cost == *oracles::min_cost_exactly_k(inst, 2));
  CHECK(evaluate(inst, k2->assignment).handled_count == 2);

  const auto k0 = polycases::min_cost_exactly_k_q2(inst, 0);
  REQUIRE(k0.has_value());
  CHECK(k0->cost == 0);
  CHECK(k0->assignment == Assignment::idle(3));

  Instance tight;
  tight.robot_count = 3;
  tight.requirements = {2, 2};
  tight.costs = {{1, 1}, {1, 1}, {1, 1}};
  CHECK(!polycases::min_cost_exactly_k_q2(tight, 2).has_value());
}

TEST_CASE("q2 gadget rejects high requirements and bad k") {
  Instance q3;
  q3.robot_count = 3;
  q3.requirements = {3};
  q3.costs = {{1}, {1}, {1}};
  CHECK_THROWS_AS(polycases::min_cost_exactly_k_q2(q3, 1), PreconditionError);
  CHECK_THROWS_AS(polycases::min_cost_exactly_k_q2(q2_example(), 3), std::invalid_argument);
}

TEST_CASE("q2 gadget equals enumeration for every k") {
  detail::SplitMix64 rng(606);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = instances::gen_random(small_cfg(rng, 6, 4, 2));
    for (int k = 0; k <= inst.task_count(); ++k) {
      const auto fast = polycases::min_cost_exactly_k_q2(inst, k);
      const auto slow = oracles::min_cost_exactly_k(inst, k);
      REQUIRE(fast.has_value() == slow.has_value());
      if (fast) {
        CHECK(fast->cost == *slow);
        CHECK(evaluate(inst, fast->assignment).handled_count == k);
        CHECK(evaluate(inst, fast->assignment).total_cost == fast->cost);
      }
    }
  }
}

TEST_CASE("the k-cost curve is monotone where feasible") {
  detail::SplitMix64 rng(707);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = instances::gen_random(small_cfg(rng, 6, 5, 2));
    const auto curve = polycases::build_k_cost_curve(inst);
    REQUIRE(curve.size() == static_cast<std::size_t>(inst.task_count()) + 1);
    for (std::size_t k = 1; k < curve.size(); ++k) {
      if (curve[k]) {
        REQUIRE(curve[k - 1].has_value());
        CHECK(curve[k - 1]->cost <= curve[k]->cost);
      }
    }
  }
}

TEST_CASE("q2 solver on the worked example budgets") {
  const Instance inst = q2_example();
  CHECK(polycases::solve_q2(inst, {BudgetKind::Total, 4}).handled_count == 2);
  const auto at3 = polycases::solve_q2(inst, {BudgetKind::Total, 3});
  CHECK(at3.handled_count == 1);
  CHECK(evaluate(inst, at3.assignment).total_cost == 1);  // handles t2 via r3
  CHECK(polycases::solve_q2(inst, {BudgetKind::Total, 1000}).handled_count == 2);
  CHECK(polycases::solve_q2(inst, {BudgetKind::Total, 0}).handled_count == 0);
}

TEST_CASE("q2 solver preconditions") {
  Instance q3;
  q3.robot_count = 3;
  q3.requirements = {3};
  q3.costs = {{1}, {1}, {1}};
  CHECK_THROWS_AS(polycases::solve_q2(q3, {BudgetKind::Total, 5}), PreconditionError);
  CHECK_THROWS_AS(polycases::solve_q2(q2_example(), {BudgetKind::PerTask, 5}), PreconditionError);
}

TEST_CASE("q2 solver equals brute force on both supported budget kinds") {
  detail::SplitMix64 rng(808);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = instances::gen_random(small_cfg(rng, 6, 4, 2));
    const Cost wt = rng.in_range(0, 20);
    CHECK(polycases::solve_q2(inst, {BudgetKind::Total, wt}).handled_count ==
          oracles::best_count_by_enumeration(inst, {BudgetKind::Total, wt}));
    const Cost wr = rng.in_range(0, 7);
    CHECK(polycases::solve_q2(inst, {BudgetKind::PerRobot, wr}).handled_count ==
          oracles::best_count_by_enumeration(inst, {BudgetKind::PerRobot, wr}));
  }
}

TEST_CASE("q2 counts are invariant under robot permutation") {
  detail::SplitMix64 rng(909);
  for (int trial = 0; trial < 25; ++trial) {
    const Instance inst = instances::gen_random(small_cfg(rng, 5, 4, 2));
    Instance permuted = inst;
    std::reverse(permuted.costs.begin(), permuted.costs.end());
    const Cost w = rng.in_range(0, 15);
    CHECK(polycases::solve_q2(inst, {BudgetKind::Total, w}).handled_count ==
          polycases::solve_q2(permuted, {BudgetKind::Total, w}).handled_count);
  }
}

TEST_CASE("handle-all cost matches the exact solver at full coverage") {
  detail::SplitMix64 rng(1010);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = instances::gen_random(small_cfg(rng, 6, 3, 2));
    const auto all = polycases::min_cost_handle_all(inst);
    if (!all) continue;
    const auto exact_at_cost = exact::exact_total_budget(inst, all->cost);
    CHECK(exact_at_cost.handled_count == inst.task_count());
    if (all->cost > 0) {
      CHECK(exact::exact_total_budget(inst, all->cost - 1).handled_count <= inst.task_count());
    }
  }
}
