#ifndef MRTA_SOLVE_REPORT_HPP
#define MRTA_SOLVE_REPORT_HPP

#include <cstdint>
#include <string>

#include "mrta/core.hpp"

namespace mrta {

struct SearchStats {
  std::int64_t subsets_examined = 0;
  std::int64_t nodes_expanded = 0;
  std::int64_t prunes = 0;
};

// What every solver returns. `optimal` is true only for exact solvers;
// evaluating `assignment` must reproduce `handled_count`.
struct SolveReport {
  int handled_count = 0;
  Assignment assignment;
  std::string solver;
  bool optimal = false;
  SearchStats stats;
};

}  // namespace mrta

#endif  // MRTA_SOLVE_REPORT_HPP
