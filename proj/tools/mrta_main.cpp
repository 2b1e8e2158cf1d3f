// Command-line front end: solve / gen / bench / verify / export-lp.
//
// Exit codes: 0 success, 1 usage or input error, 2 solver precondition
// violated, 3 verification failure.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mrta/core.hpp"
#include "mrta/errors.hpp"
#include "mrta/exact.hpp"
#include "mrta/harness.hpp"
#include "mrta/instances.hpp"
#include "mrta/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerifyFailed = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

std::optional<std::uint64_t> env_seed_override() {
  const char* raw = std::getenv("MRTA_SEED");
  if (!raw || !*raw) return std::nullopt;
  return std::strtoull(raw, nullptr, 10);
}

mrta::approx::Fraction parse_eps(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    throw CLI::ValidationError("--eps", "expected a fraction like 1/4");
  }
  mrta::approx::Fraction eps;
  eps.num = std::stoi(text.substr(0, slash));
  eps.den = std::stoi(text.substr(slash + 1));
  return eps;
}

std::string format_report(const mrta::Instance& inst, const mrta::SolveReport& report) {
  const mrta::Evaluation ev = mrta::evaluate(inst, report.assignment);
  mrta::Cost max_task = 0, max_robot = 0;
  for (mrta::Cost c : ev.per_task_cost) max_task = std::max(max_task, c);
  for (mrta::Cost c : ev.per_robot_cost) max_robot = std::max(max_robot, c);

  std::ostringstream out;
  out << "solver: " << report.solver << "\n";
  out << "handled: " << report.handled_count << "\n";
  out << "optimal: " << (report.optimal ? "true" : "false") << "\n";
  out << "total_cost: " << ev.total_cost << "\n";
  out << "max_task_cost: " << max_task << "\n";
  out << "max_robot_cost: " << max_robot << "\n";
  out << "assignment:";
  for (int j : report.assignment.task_of_robot) {
    if (j == mrta::Assignment::kIdle) {
      out << " -";
    } else {
      out << " t" << (j + 1);
    }
  }
  out << "\n";
  out << "stats: subsets=" << report.stats.subsets_examined
      << " nodes=" << report.stats.nodes_expanded << " prunes=" << report.stats.prunes << "\n";
  return out.str();
}

struct GenArgs {
  std::string family = "random";
  std::uint64_t seed = 0;
  int n = 4;
  int m = 3;
  mrta::Cost cost_lo = 0;
  mrta::Cost cost_hi = 9;
  int q_max = 2;
  bool symmetric = false;
  bool uniform = false;
  std::int64_t box = 10;
  std::int64_t scale = 1;
  std::string kind = "total";
  std::optional<mrta::Cost> budget;
  int vertices = 4;
  int edge_percent = 50;
  std::string edges;  // "0-1,1-2"
  std::string numbers;  // "1,1,4,1,1,4"
};

std::vector<std::pair<int, int>> parse_edges(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto dash = part.find('-');
    if (dash == std::string::npos) throw std::runtime_error("bad edge '" + part + "'");
    edges.push_back({std::stoi(part.substr(0, dash)), std::stoi(part.substr(dash + 1))});
  }
  return edges;
}

std::vector<std::int64_t> parse_numbers(const std::string& text) {
  std::vector<std::int64_t> numbers;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) numbers.push_back(std::stoll(part));
  return numbers;
}

// Small deterministic generator for random graphs / adjacencies in gen.
class Bits {
 public:
  explicit Bits(std::uint64_t seed) : state_(seed) {}

  bool chance(int percent) { return static_cast<int>(next() % 100) < percent; }

 private:
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

std::pair<mrta::Instance, mrta::Budget> generate(const GenArgs& args) {
  const auto kind = mrta::budget_kind_from_name(args.kind);
  if (!kind) throw std::runtime_error("unknown budget kind '" + args.kind + "'");

  if (args.family == "random" || args.family == "location") {
    mrta::instances::GeneratorConfig cfg;
    cfg.seed = args.seed;
    cfg.robot_count = args.n;
    cfg.task_count = args.m;
    cfg.cost_lo = args.cost_lo;
    cfg.cost_hi = args.cost_hi;
    cfg.max_requirement = args.q_max;
    cfg.symmetric = args.symmetric;
    cfg.uniform = args.uniform;
    if (args.family == "location") cfg.location = {args.box, args.scale};
    const mrta::Instance inst = args.family == "location"
                                    ? mrta::instances::gen_location_based(cfg)
                                    : mrta::instances::gen_random(cfg);
    mrta::Cost budget = 0;
    if (args.budget) {
      budget = *args.budget;
    } else {
      mrta::Cost max_cost = 0;
      for (const auto& row : inst.costs) {
        for (mrta::Cost c : row) max_cost = std::max(max_cost, c);
      }
      mrta::Cost hi = max_cost;
      if (*kind == mrta::BudgetKind::Total) hi = max_cost * std::max(1, args.n);
      if (*kind == mrta::BudgetKind::PerTask) hi = max_cost * std::max(1, args.q_max);
      budget = hi > 0 ? static_cast<mrta::Cost>(args.seed % (hi + 1)) : 0;
    }
    return {inst, {*kind, budget}};
  }
  if (args.family == "is") {
    std::vector<std::pair<int, int>> edges;
    if (!args.edges.empty()) {
      edges = parse_edges(args.edges);
    } else {
      Bits bits(args.seed);
      for (int a = 0; a < args.vertices; ++a) {
        for (int b = a + 1; b < args.vertices; ++b) {
          if (bits.chance(args.edge_percent)) edges.push_back({a, b});
        }
      }
    }
    auto reduction = mrta::instances::gen_from_independent_set(args.vertices, edges);
    return {std::move(reduction.instance), reduction.budget};
  }
  if (args.family == "3partition") {
    const auto numbers = parse_numbers(args.numbers);
    if (numbers.empty()) throw std::runtime_error("--numbers is required for 3partition");
    auto problem =
        mrta::instances::gen_from_3partition(numbers, static_cast<int>(numbers.size()) / 3);
    return {std::move(problem.instance), problem.budget};
  }
  if (args.family == "bitcost") {
    Bits bits(args.seed);
    std::vector<std::vector<bool>> adjacency(static_cast<std::size_t>(args.n),
                                             std::vector<bool>(static_cast<std::size_t>(args.m)));
    for (auto& row : adjacency) {
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = bits.chance(args.edge_percent);
    }
    auto problem = mrta::instances::gen_bitcost(adjacency, *kind);
    return {std::move(problem.instance), problem.budget};
  }
  throw std::runtime_error("unknown family '" + args.family + "'");
}

std::vector<mrta::harness::NamedInstance> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".inst") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<mrta::harness::NamedInstance> corpus;
  for (const auto& path : files) {
    auto parsed = mrta::io::parse_instance(read_file(path.string()));
    corpus.push_back({path.stem().string(), std::move(parsed.instance), parsed.budget});
  }
  return corpus;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budgeted multi-robot task allocation solvers"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one instance file");
  std::string solve_solver;
  std::string solve_file;
  std::string solve_eps = "1/4";
  int solve_swap_depth = 2;
  bool solve_force = false;
  solve->add_option("--solver", solve_solver, "Solver name")->required();
  solve->add_option("file", solve_file, "Instance file")->required();
  solve->add_option("--eps", solve_eps, "PTAS accuracy as a fraction (default 1/4)");
  solve->add_option("--swap-depth", solve_swap_depth, "Set-packing local search depth");
  solve->add_flag("--force", solve_force, "Lift enumeration caps");

  // export-lp
  auto* export_lp = app.add_subcommand("export-lp", "Write the integer program in LP format");
  std::string lp_file;
  std::string lp_out;
  export_lp->add_option("file", lp_file, "Instance file")->required();
  export_lp->add_option("-o,--output", lp_out, "Output path (default stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  GenArgs gen_args;
  std::string gen_out;
  std::int64_t gen_budget = -1;
  gen->add_option("--family", gen_args.family, "random|location|is|3partition|bitcost");
  gen->add_option("--seed", gen_args.seed, "Generator seed");
  gen->add_option("--n", gen_args.n, "Robot count");
  gen->add_option("--m", gen_args.m, "Task count");
  gen->add_option("--cost-lo", gen_args.cost_lo, "Minimum cost");
  gen->add_option("--cost-hi", gen_args.cost_hi, "Maximum cost");
  gen->add_option("--q-max", gen_args.q_max, "Maximum requirement");
  gen->add_flag("--symmetric", gen_args.symmetric, "Column-constant costs");
  gen->add_flag("--uniform", gen_args.uniform, "One requirement for every task");
  gen->add_option("--box", gen_args.box, "Location bounding box");
  gen->add_option("--scale", gen_args.scale, "Location cost scale");
  gen->add_option("--kind", gen_args.kind, "Budget kind (total|per-task|per-robot)");
  gen->add_option("--budget", gen_budget, "Budget value (default: derived from seed)");
  gen->add_option("--vertices", gen_args.vertices, "Graph vertices (is family)");
  gen->add_option("--edge-percent", gen_args.edge_percent, "Random edge probability in percent");
  gen->add_option("--edges", gen_args.edges, "Explicit edges '0-1,1-2' (is family)");
  gen->add_option("--numbers", gen_args.numbers, "Multiset '1,1,4,...' (3partition family)");
  gen->add_option("-o,--output", gen_out, "Output path (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "Run solvers over a corpus, write a CSV table");
  std::string bench_corpus;
  std::vector<std::string> bench_solvers;
  std::string bench_out;
  bool bench_timing = false;
  int bench_count = 0;
  GenArgs bench_gen;
  std::string bench_eps = "1/4";
  bench->add_option("--corpus", bench_corpus, "Directory of .inst files");
  bench->add_option("--count", bench_count, "Generate this many random instances instead");
  bench->add_option("--seed", bench_gen.seed, "Seed for generated corpora");
  bench->add_option("--n", bench_gen.n, "Robot count for generated corpora");
  bench->add_option("--m", bench_gen.m, "Task count for generated corpora");
  bench->add_option("--cost-hi", bench_gen.cost_hi, "Maximum cost for generated corpora");
  bench->add_option("--q-max", bench_gen.q_max, "Maximum requirement for generated corpora");
  bench->add_flag("--symmetric", bench_gen.symmetric, "Generated corpora: symmetric costs");
  bench->add_flag("--uniform", bench_gen.uniform, "Generated corpora: uniform requirements");
  bench->add_option("--kind", bench_gen.kind, "Budget kind for generated corpora");
  bench->add_option("--solvers", bench_solvers, "Comma-separated solver list")
      ->required()
      ->delimiter(',');
  bench->add_option("-o,--output", bench_out, "CSV output path")->required();
  bench->add_flag("--timing", bench_timing, "Record wall times (off: micros column is 0)");
  bench->add_option("--eps", bench_eps, "PTAS accuracy");

  // verify
  auto* verify = app.add_subcommand("verify", "Cross-check solvers against oracles");
  std::string verify_family = "all";
  int verify_trials = 100;
  std::uint64_t verify_seed = 20240101;
  verify->add_option("--family", verify_family,
                     "exact|polycases|q2|ratios|is-reduction|3partition|2kp|all");
  verify->add_option("--trials", verify_trials, "Trials per family");
  verify->add_option("--seed", verify_seed, "Base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      const auto parsed = mrta::io::parse_instance(read_file(solve_file));
      mrta::harness::SolverOptions opts;
      opts.eps = parse_eps(solve_eps);
      opts.swap_depth = solve_swap_depth;
      opts.force = solve_force;
      try {
        const auto report =
            mrta::harness::run_solver(solve_solver, parsed.instance, parsed.budget, opts);
        std::cout << format_report(parsed.instance, report);
      } catch (const mrta::PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
      }
      return kExitOk;
    }

    if (*export_lp) {
      const auto parsed = mrta::io::parse_instance(read_file(lp_file));
      write_output(lp_out, mrta::exact::export_lp(parsed.instance, parsed.budget));
      return kExitOk;
    }

    if (*gen) {
      if (const auto seed = env_seed_override()) gen_args.seed = *seed;
      if (gen_budget >= 0) gen_args.budget = gen_budget;
      const auto [inst, budget] = generate(gen_args);
      write_output(gen_out, mrta::io::serialize_instance(inst, budget));
      return kExitOk;
    }

    if (*bench) {
      if (const auto seed = env_seed_override()) bench_gen.seed = *seed;
      std::vector<mrta::harness::NamedInstance> corpus;
      if (!bench_corpus.empty()) {
        corpus = load_corpus(bench_corpus);
      } else if (bench_count > 0) {
        for (int i = 0; i < bench_count; ++i) {
          GenArgs one = bench_gen;
          one.seed = bench_gen.seed + static_cast<std::uint64_t>(i);
          auto [inst, budget] = generate(one);
          char id[32];
          std::snprintf(id, sizeof(id), "random-%04d", i);
          corpus.push_back({id, std::move(inst), budget});
        }
      } else {
        std::cerr << "bench needs --corpus or --count\n";
        return kExitUsage;
      }
      mrta::harness::SolverOptions opts;
      opts.eps = parse_eps(bench_eps);
      const auto rows = mrta::harness::run_bench(corpus, bench_solvers, bench_timing, opts);
      write_output(bench_out, mrta::harness::bench_csv(rows));
      return kExitOk;
    }

    if (*verify) {
      if (const auto seed = env_seed_override()) verify_seed = *seed;
      const auto result = mrta::harness::run_verify(verify_family, verify_trials, verify_seed);
      std::cout << "verify: family=" << verify_family << " trials=" << verify_trials
                << " checks=" << result.checks_run << " failures=" << result.failures.size()
                << "\n";
      for (const auto& failure : result.failures) {
        std::cout << "FAIL [" << failure.family << "] " << failure.message << "\n";
        std::cout << "--- counterexample ---\n" << failure.serialized_instance << "---\n";
      }
      if (!result.ok()) return kExitVerifyFailed;
      std::cout << "verify: pass\n";
      return kExitOk;
    }
  } catch (const mrta::io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
