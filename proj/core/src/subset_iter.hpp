#ifndef MRTA_SRC_SUBSET_ITER_HPP
#define MRTA_SRC_SUBSET_ITER_HPP

#include <functional>
#include <numeric>
#include <vector>

namespace mrta::detail {

// Visits every size-k subset of {0..m-1} in lexicographic order until the
// body returns true; returns whether a body call returned true.
inline bool for_each_subset(int m, int k,
                            const std::function<bool(const std::vector<int>&)>& body) {
  if (k > m || k < 0) return false;
  std::vector<int> subset(static_cast<std::size_t>(k));
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    if (body(subset)) return true;
    int i = k - 1;
    while (i >= 0 && subset[i] == m - k + i) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace mrta::detail

#endif  // MRTA_SRC_SUBSET_ITER_HPP
