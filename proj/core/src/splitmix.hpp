#ifndef MRTA_SRC_SPLITMIX_HPP
#define MRTA_SRC_SPLITMIX_HPP

#include <cstdint>

namespace mrta::detail {

// Deterministic across platforms, unlike the std distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  bool chance(int num, int den) { return in_range(1, den) <= num; }

 private:
  std::uint64_t state_;
};

}  // namespace mrta::detail

#endif  // MRTA_SRC_SPLITMIX_HPP
