#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "mrta/approx.hpp"
#include "mrta/errors.hpp"
#include "mrta/harness.hpp"
#include "mrta/instances.hpp"
#include "mrta/io.hpp"
#include "oracles.hpp"

using namespace mrta;

TEST_CASE("solver dispatch runs every named solver or rejects the kind") {
  const auto parsed = io::parse_instance(
      "robots 4\ntasks 2\n1\n1\ncosts symmetric\n2 3\nbudget total 10\n");
  for (const std::string& name : harness::solver_names()) {
    try {
      const auto report = harness::run_solver(name, parsed.instance, parsed.budget);
      CHECK(evaluate(parsed.instance, report.assignment).handled_count == report.handled_count);
    } catch (const PreconditionError&) {
      // kind or tag mismatch is a legal outcome for total-budget input
    }
  }
  CHECK_THROWS_AS(harness::run_solver("simplex", parsed.instance, parsed.budget),
                  std::invalid_argument);
  CHECK_THROWS_AS(harness::run_solver("exact-task", parsed.instance, parsed.budget),
                  PreconditionError);
}

TEST_CASE("force lifts the brute force cap") {
  const Instance big = oracles::example2();
  CHECK_THROWS_AS(harness::run_solver("brute-force", big, {BudgetKind::Total, 250}),
                  CapExceededError);
  // Not actually run: 101^100 nodes would never finish. Use a small instance
  // that exceeds only the task cap instead.
  Instance wide;
  wide.robot_count = 2;
  wide.requirements.assign(7, 1);
  wide.costs.assign(2, std::vector<Cost>(7, 1));
  CHECK_THROWS_AS(harness::run_solver("brute-force", wide, {BudgetKind::Total, 10}),
                  CapExceededError);
  harness::SolverOptions opts;
  opts.force = true;
  CHECK(harness::run_solver("brute-force", wide, {BudgetKind::Total, 10}, opts).handled_count ==
        2);
}

TEST_CASE("bench emits one row per instance and solver with exact ratios") {
  std::vector<harness::NamedInstance> corpus;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    instances::GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.robot_count = 4;
    cfg.task_count = 3;
    cfg.max_requirement = 2;
    cfg.cost_hi = 5;
    char id[16];
    std::snprintf(id, sizeof(id), "r%02llu", static_cast<unsigned long long>(seed));
    corpus.push_back({id, instances::gen_random(cfg), {BudgetKind::Total, Cost(seed % 12)}});
  }

  const auto rows = harness::run_bench(corpus, {"exact-total", "greedy-total"}, false);
  REQUIRE(rows.size() == 20);
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    CHECK(rows[i].id == rows[i + 1].id);
    CHECK(rows[i].solver == "exact-total");
    CHECK(rows[i + 1].solver == "greedy-total");
    CHECK(rows[i].ratio == "1.0000");
    CHECK(rows[i].micros == 0);
    // (q*+1) * greedy >= exact means the ratio stays below q*+1.
    if (!rows[i + 1].ratio.empty()) {
      CHECK(std::stod(rows[i + 1].ratio) <= rows[i].qstar + 1.0);
    }
  }

  const std::string csv = harness::bench_csv(rows);
  CHECK(csv.rfind("id,n,m,qstar,kind,W,solver,count,optimal,micros,ratio\n", 0) == 0);

  // Deterministic without timing.
  const auto rows2 = harness::run_bench(corpus, {"exact-total", "greedy-total"}, false);
  CHECK(harness::bench_csv(rows2) == csv);
}

TEST_CASE("bench marks capped solvers as skipped") {
  std::vector<harness::NamedInstance> corpus;
  corpus.push_back({"big", oracles::example2(), {BudgetKind::Total, 250}});
  const auto rows = harness::run_bench(corpus, {"brute-force", "exact-total"}, false);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].count == "skipped");
  CHECK(rows[0].optimal == "-");
  CHECK(rows[1].count == "2");
}

TEST_CASE("bench ratios of the ptas stay under the accuracy bound") {
  std::vector<harness::NamedInstance> corpus;
  for (std::uint64_t seed = 50; seed < 70; ++seed) {
    instances::GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.robot_count = 5;
    cfg.task_count = 4;
    cfg.symmetric = true;
    cfg.max_requirement = 2;
    cfg.cost_hi = 6;
    char id[16];
    std::snprintf(id, sizeof(id), "s%02llu", static_cast<unsigned long long>(seed));
    corpus.push_back({id, instances::gen_random(cfg), {BudgetKind::Total, Cost(seed % 15)}});
  }
  harness::SolverOptions opts;
  opts.eps = {1, 4};
  const auto rows = harness::run_bench(corpus, {"exact-total", "ptas"}, false, opts);
  for (const auto& row : rows) {
    if (row.solver == "ptas" && !row.ratio.empty()) {
      CHECK(std::stod(row.ratio) <= 1.0 / (1.0 - 0.25) + 1e-9);
    }
  }
}

TEST_CASE("bench of an empty corpus is just the header") {
  const auto rows = harness::run_bench({}, {"greedy-total"}, false);
  CHECK(rows.empty());
  CHECK(harness::bench_csv(rows) == "id,n,m,qstar,kind,W,solver,count,optimal,micros,ratio\n");
}

TEST_CASE("verify families pass on fresh instances") {
  for (const std::string& family : harness::verify_families()) {
    const auto result = harness::run_verify(family, family == "all" ? 10 : 30, 991);
    CHECK(result.checks_run > 0);
    for (const auto& failure : result.failures) {
      FAIL_CHECK(family, ": ", failure.message, "\n", failure.serialized_instance);
    }
  }
  CHECK_THROWS_AS(harness::run_verify("nonsense", 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(harness::run_verify("exact", 0, 1), std::invalid_argument);
}

TEST_CASE("the checker catches a mutant greedy that ignores its budget") {
  // Run the greedy with an unlimited budget and submit the result as if it
  // respected W: the feasibility check must reject it and the printed
  // counterexample must reproduce the failure after a round trip.
  const auto parsed = io::parse_instance(
      "robots 2\ntasks 2\n1\n1\ncosts matrix\n5 9\n9 5\nbudget total 4\n");
  const auto mutant = approx::greedy_total(parsed.instance, 1'000'000);
  const int exact = oracles::best_count_by_enumeration(parsed.instance, parsed.budget);
  const auto failure =
      harness::check_approx_report(parsed.instance, parsed.budget, mutant, exact, 2, 1);
  REQUIRE(failure.has_value());
  CHECK(failure->find("violates") != std::string::npos);

  const std::string counterexample =
      io::serialize_instance(parsed.instance, parsed.budget);
  const auto reparsed = io::parse_instance(counterexample);
  const auto mutant2 = approx::greedy_total(reparsed.instance, 1'000'000);
  CHECK(harness::check_approx_report(reparsed.instance, reparsed.budget, mutant2, exact, 2, 1)
            .has_value());
}

TEST_CASE("the checker accepts an honest greedy") {
  const auto parsed = io::parse_instance(
      "robots 2\ntasks 2\n1\n1\ncosts matrix\n5 9\n9 5\nbudget total 4\n");
  const auto honest = approx::greedy_total(parsed.instance, parsed.budget.value);
  const int exact = oracles::best_count_by_enumeration(parsed.instance, parsed.budget);
  CHECK(!harness::check_approx_report(parsed.instance, parsed.budget, honest, exact, 2, 1)
             .has_value());
}
