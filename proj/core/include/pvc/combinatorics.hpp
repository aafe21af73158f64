#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace pvc {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// C(n, r), saturating at kSaturated.
inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  __extension__ using Wide = unsigned __int128;
  Wide acc = 1;
  for (int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

// sum_{i=0}^{d} C(n, i); 0 for d < 0. Saturating.
inline std::uint64_t sauer_sum(int n, int d) {
  std::uint64_t total = 0;
  for (int i = 0; i <= d && i <= n; ++i) {
    const std::uint64_t b = binomial(n, i);
    if (b == kSaturated || total > kSaturated - b) return kSaturated;
    total += b;
  }
  return total;
}

// 2^k, saturating.
inline std::uint64_t pow2(int k) {
  return k >= 63 ? kSaturated : (std::uint64_t{1} << k);
}

// Visits every r-subset of {0..n-1} in lexicographic order of the sorted
// index tuple. The visitor returns false to stop early. Returns the number
// of subsets visited.
template <typename Visitor>
std::uint64_t for_each_combination(int n, int r, Visitor&& visit) {
  if (r < 0 || r > n) return 0;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    if (!visit(static_cast<const std::vector<int>&>(idx))) return visited;
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return visited;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace pvc
