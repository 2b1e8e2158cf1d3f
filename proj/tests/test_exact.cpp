#include <doctest.h>

#include <stdexcept>

#include "mrta/errors.hpp"
#include "mrta/exact.hpp"
#include "mrta/instances.hpp"
#include "oracles.hpp"
#include "splitmix.hpp"

using namespace mrta;

TEST_CASE("brute force solves the first example") {
  const auto report = exact::brute_force(oracles::example1(), {BudgetKind::Total, 100});
  CHECK(report.handled_count == 2);
  CHECK(report.optimal);
  CHECK(evaluate(oracles::example1(), report.assignment).handled_count == 2);
  CHECK(is_feasible(oracles::example1(), {BudgetKind::Total, 100}, report.assignment));
}

TEST_CASE("brute force refuses instances beyond its cap") {
  CHECK_THROWS_AS(exact::brute_force(oracles::example2(), {BudgetKind::Total, 250}),
                  CapExceededError);
  CHECK_THROWS_AS(exact::brute_force(oracles::example2(), {BudgetKind::Total, 250}),
                  PreconditionError);  // cap errors are precondition errors
}

TEST_CASE("brute force with no tasks") {
  Instance inst;
  inst.robot_count = 3;
  inst.costs.assign(3, {});
  const auto report = exact::brute_force(inst, {BudgetKind::Total, 5});
  CHECK(report.handled_count == 0);
}

TEST_CASE("exact total solves both paper examples") {
  const auto r1 = exact::exact_total_budget(oracles::example1(), 100);
  CHECK(r1.handled_count == 2);
  CHECK(r1.optimal);

  const auto r2 = exact::exact_total_budget(oracles::example2(), 250);
  CHECK(r2.handled_count == 2);
  const Evaluation ev = evaluate(oracles::example2(), r2.assignment);
  CHECK(ev.total_cost == 240);  // tasks t2 and t3
  CHECK(ev.handled == std::vector<bool>{false, true, true});
}

TEST_CASE("exact total with zero budget and positive costs") {
  Instance inst;
  inst.robot_count = 2;
  inst.requirements = {1};
  inst.costs = {{3}, {4}};
  CHECK(exact::exact_total_budget(inst, 0).handled_count == 0);
}

TEST_CASE("exact task budget on a symmetric pair") {
  Instance inst;
  inst.robot_count = 4;
  inst.requirements = {2, 2};
  inst.costs.assign(4, {1, 2});
  inst.symmetric_costs = std::vector<Cost>{1, 2};
  const int oracle = oracles::best_count_by_enumeration(inst, {BudgetKind::PerTask, 4});
  CHECK(oracle == 2);
  CHECK(exact::exact_task_budget(inst, 4).handled_count == 2);

  // Budget below every completing cost handles nothing.
  CHECK(exact::exact_task_budget(inst, 1).handled_count == 0);
}

TEST_CASE("exact task budget on the unit 3-partition instance") {
  const auto problem = instances::gen_from_3partition({1, 1, 1, 1, 1, 1}, 2);
  CHECK(problem.budget.value == 3);
  const int oracle =
      oracles::best_count_by_enumeration(problem.instance, problem.budget);
  CHECK(oracle == 2);
  CHECK(exact::exact_task_budget(problem.instance, problem.budget.value).handled_count == 2);
}

TEST_CASE("exact robot budget examples") {
  Instance inst;
  inst.robot_count = 3;
  inst.requirements = {1, 1};
  inst.costs = {{1, 9}, {9, 1}, {1, 1}};
  const auto report = exact::exact_robot_budget(inst, 1);
  CHECK(report.handled_count == 2);
  CHECK(is_feasible(inst, {BudgetKind::PerRobot, 1}, report.assignment));

  // W at the maximum cost equals the unbudgeted coverage maximum.
  CHECK(exact::exact_robot_budget(inst, 9).handled_count ==
        oracles::best_count_by_enumeration(inst, {BudgetKind::PerRobot, 9}));

  CHECK(exact::exact_robot_budget(inst, 0).handled_count == 0);
}

TEST_CASE("the three exact solvers match the enumeration oracle") {
  detail::SplitMix64 rng(5150);
  for (int trial = 0; trial < 60; ++trial) {
    instances::GeneratorConfig cfg;
    cfg.seed = rng.next();
    cfg.robot_count = static_cast<int>(rng.in_range(1, 6));
    cfg.task_count = static_cast<int>(rng.in_range(1, 4));
    cfg.cost_hi = 7;
    cfg.max_requirement = 3;
    const Instance inst = instances::gen_random(cfg);

    const Cost wt = rng.in_range(0, 20);
    CHECK(exact::exact_total_budget(inst, wt).handled_count ==
          oracles::best_count_by_enumeration(inst, {BudgetKind::Total, wt}));

    const Cost wk = rng.in_range(0, 12);
    CHECK(exact::exact_task_budget(inst, wk).handled_count ==
          oracles::best_count_by_enumeration(inst, {BudgetKind::PerTask, wk}));

    const Cost wr = rng.in_range(0, 7);
    CHECK(exact::exact_robot_budget(inst, wr).handled_count ==
          oracles::best_count_by_enumeration(inst, {BudgetKind::PerRobot, wr}));
  }
}

TEST_CASE("exact counts are monotone in the budget") {
  detail::SplitMix64 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    instances::GeneratorConfig cfg;
    cfg.seed = rng.next();
    cfg.robot_count = static_cast<int>(rng.in_range(1, 5));
    cfg.task_count = static_cast<int>(rng.in_range(1, 4));
    cfg.cost_hi = 5;
    cfg.max_requirement = 2;
    const Instance inst = instances::gen_random(cfg);

    int prev_total = -1, prev_robot = -1;
    for (Cost w = 0; w <= 12; w += 3) {
      const int total = exact::exact_total_budget(inst, w).handled_count;
      const int robot = exact::exact_robot_budget(inst, w).handled_count;
      CHECK(total >= prev_total);
      CHECK(robot >= prev_robot);
      prev_total = total;
      prev_robot = robot;
    }
  }
}

TEST_CASE("witnesses returned by exact solvers are feasible") {
  detail::SplitMix64 rng(8888);
  for (int trial = 0; trial < 30; ++trial) {
    instances::GeneratorConfig cfg;
    cfg.seed = rng.next();
    cfg.robot_count = static_cast<int>(rng.in_range(1, 6));
    cfg.task_count = static_cast<int>(rng.in_range(1, 4));
    cfg.cost_hi = 6;
    cfg.max_requirement = 2;
    const Instance inst = instances::gen_random(cfg);
    const Cost w = rng.in_range(0, 10);

    for (const Budget budget : {Budget{BudgetKind::Total, w}, Budget{BudgetKind::PerTask, w},
                                Budget{BudgetKind::PerRobot, w}}) {
      SolveReport report;
      switch (budget.kind) {
        case BudgetKind::Total: report = exact::exact_total_budget(inst, w); break;
        case BudgetKind::PerTask: report = exact::exact_task_budget(inst, w); break;
        case BudgetKind::PerRobot: report = exact::exact_robot_budget(inst, w); break;
      }
      CHECK(is_feasible(inst, budget, report.assignment));
      CHECK(evaluate(inst, report.assignment).handled_count == report.handled_count);
    }
  }
}

TEST_CASE("LP export contains the documented rows for the first example") {
  const std::string lp = exact::export_lp(oracles::example1(), {BudgetKind::Total, 100});
  CHECK(lp.find("Maximize") != std::string::npos);
  CHECK(lp.find("obj: z_1 + z_2 + z_3") != std::string::npos);
  CHECK(lp.find("100 x_1_1") != std::string::npos);
  CHECK(lp.find("<= 100") != std::string::npos);
  CHECK(lp.find("cover_1: x_1_1 + x_2_1 + x_3_1 + x_4_1 - 1 z_1 >= 0") != std::string::npos);
  CHECK(lp.find("robot_1: x_1_1 + x_1_2 + x_1_3 <= 1") != std::string::npos);
  CHECK(lp.find("Binary") != std::string::npos);
  CHECK(lp.find("End") != std::string::npos);
}

TEST_CASE("LP export of an empty program") {
  Instance inst;
  inst.robot_count = 2;
  inst.costs.assign(2, {});
  const std::string lp = exact::export_lp(inst, {BudgetKind::Total, 5});
  CHECK(lp == "Maximize\n obj: 0\nSubject To\nEnd\n");
}

TEST_CASE("LP export writes one budget row per task for per-task budgets") {
  const std::string lp = exact::export_lp(oracles::example1(), {BudgetKind::PerTask, 100});
  CHECK(lp.find("budget_1: 100 x_1_1 + 100 x_2_1 + 100 x_3_1 + 100 x_4_1 - 100 z_1 <= 0") !=
        std::string::npos);
  CHECK(lp.find("budget_3: 1 x_1_3 + 1 x_2_3 + 1 x_3_3 + 1 x_4_3 - 100 z_3 <= 0") !=
        std::string::npos);
}

TEST_CASE("LP export writes one budget row per robot for per-robot budgets") {
  const std::string lp = exact::export_lp(oracles::example1(), {BudgetKind::PerRobot, 7});
  CHECK(lp.find("budget_4: 100 x_4_1 + 1 x_4_2 + 1 x_4_3 <= 7") != std::string::npos);
}
