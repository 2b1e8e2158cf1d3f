#ifndef MRTA_HARNESS_HPP
#define MRTA_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mrta/approx.hpp"
#include "mrta/core.hpp"
#include "mrta/solve_report.hpp"

namespace mrta::harness {

struct SolverOptions {
  approx::Fraction eps{1, 4};
  int swap_depth = 2;
  bool force = false;  // lifts enumeration caps; never overrides structure tags
};

// Dispatch by CLI solver name; throws PreconditionError when the instance or
// budget kind is outside the solver's domain, std::invalid_argument for
// unknown names.
SolveReport run_solver(const std::string& name, const Instance& inst, const Budget& budget,
                       const SolverOptions& opts = {});

const std::vector<std::string>& solver_names();

struct NamedInstance {
  std::string id;
  Instance instance;
  Budget budget;
};

struct BenchRow {
  std::string id;
  int n = 0;
  int m = 0;
  int qstar = 0;
  std::string kind;
  Cost budget = 0;
  std::string solver;
  std::string count;    // handled count, or "skipped" above a cap
  std::string optimal;  // "true" / "false" / "-"
  std::int64_t micros = 0;
  std::string ratio;    // exact/count to 4 decimals, empty when undefined
};

// One row per (instance, solver), sorted by instance id then solver-list
// order. with_timing=false zeroes the micros column for byte-stable output.
std::vector<BenchRow> run_bench(const std::vector<NamedInstance>& corpus,
                                const std::vector<std::string>& solvers, bool with_timing,
                                const SolverOptions& opts = {});

std::string bench_csv(const std::vector<BenchRow>& rows);

struct VerifyFailure {
  std::string family;
  std::string message;
  std::string serialized_instance;
};

struct VerifyResult {
  int checks_run = 0;
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Families: exact, polycases, q2, ratios, is-reduction, 3partition, 2kp, all.
VerifyResult run_verify(const std::string& family, int trials, std::uint64_t seed);

const std::vector<std::string>& verify_families();

// Shared checker: a report must carry a feasible witness that reproduces its
// count, and (ratio_num/ratio_den) * count must reach the exact optimum.
// Returns a failure message, or nullopt when the report passes.
std::optional<std::string> check_approx_report(const Instance& inst, const Budget& budget,
                                               const SolveReport& report, int exact_count,
                                               int ratio_num, int ratio_den);

}  // namespace mrta::harness

#endif  // MRTA_HARNESS_HPP
