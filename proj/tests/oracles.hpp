#ifndef POLYPART_TESTS_ORACLES_HPP
#define POLYPART_TESTS_ORACLES_HPP

// Test-only counting routines that share no code with the library.

#include <cstdint>
#include <vector>

namespace polypart::oracle {

/// Partitions of n using only parts in [low, high], by coin-change DP.
inline std::int64_t restricted_partitions(std::int64_t n, std::int64_t low, std::int64_t high) {
  if (n < 0)
    return 0;
  std::vector<std::int64_t> ways(static_cast<std::size_t>(n + 1), 0);
  ways[0] = 1;
  for (std::int64_t part = low; part <= high; ++part)
    for (std::int64_t s = part; s <= n; ++s)
      ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  return ways[static_cast<std::size_t>(n)];
}

/// Partitions of n with smallest part exactly m and largest part at most m + t:
/// one copy of m plus any partition of n - m into parts in [m, m + t].
inline std::int64_t smallest_part(std::int64_t n, std::int64_t t, std::int64_t m) {
  return restricted_partitions(n - m, m, m + t);
}

inline std::int64_t bounded(std::int64_t n, std::int64_t t) {
  std::int64_t total = 0;
  for (std::int64_t m = 1; m <= n; ++m)
    total += smallest_part(n, t, m);
  return total;
}

/// Largest - smallest == t exactly: both m and m + t occur.
inline std::int64_t fixed(std::int64_t n, std::int64_t t) {
  if (t == 0)
    return bounded(n, 0);
  std::int64_t total = 0;
  for (std::int64_t m = 1; 2 * m + t <= n; ++m)
    total += restricted_partitions(n - 2 * m - t, m, m + t);
  return total;
}

inline std::int64_t divisors(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t d = 1; d <= n; ++d)
    count += n % d == 0;
  return count;
}

} // namespace polypart::oracle

#endif
