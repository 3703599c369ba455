#ifndef POLYPART_BIJECTION_HPP
#define POLYPART_BIJECTION_HPP

#include "polypart/cones.hpp"
#include "polypart/partition.hpp"
#include "polypart/report.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace polypart {

class InvalidPair : public Error {
public:
  using Error::Error;
};

class NotInLattice : public Error {
public:
  using Error::Error;
};

class NotInX : public Error {
public:
  using Error::Error;
};

/// A non-empty partition with parts at most t, together with a
/// non-negative multiple `ell` of t.
class BijectionPair {
public:
  /// Throws InvalidPair when the invariants fail.
  BijectionPair(Partition mu_bar, std::int64_t ell, std::int64_t t);

  /// Parses "P,L" with P in the partition grammar.
  static BijectionPair parse(std::string_view text, std::int64_t t);

  const Partition &mu_bar() const { return mu_bar_; }
  std::int64_t ell() const { return ell_; }
  std::int64_t t() const { return t_; }
  std::int64_t height() const { return mu_bar_.weight() + ell_; }

  /// "P,L".
  std::string str() const;
  /// {"mu_bar": "<partition>", "ell": L}.
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const BijectionPair &, const BijectionPair &) = default;

private:
  Partition mu_bar_;
  std::int64_t ell_;
  std::int64_t t_;
};

/// Which cone C_m the pair's lattice point falls in, and its coefficients
/// with respect to the generators v_m, ..., v_{m+t}.
struct Decomposition {
  std::int64_t m = 0;
  std::int64_t j = 0;        // (m - 1) mod t
  std::int64_t K = 0;        // (m - 1) div t
  std::int64_t alpha_star_j = 0;
  // (alpha_j, ..., alpha_{t-1}, alpha*_0, ..., alpha*_j): the coefficients
  // of v_m, ..., v_{m+t} in order.
  std::vector<std::int64_t> alphas;

  friend bool operator==(const Decomposition &, const Decomposition &) = default;
};

Decomposition decompose_m(const BijectionPair &pair);

/// Height-preserving map onto partitions with smallest part m and
/// largest - smallest <= t.
Partition pair_to_partition(const BijectionPair &pair);

/// Inverse of pair_to_partition. Throws InvalidPartition unless `lambda`
/// is non-empty with largest - smallest <= t.
BijectionPair partition_to_pair(std::int64_t t, const Partition &lambda);

/// Reads (x_0..x_{t-1}) as a partition and conjugates it; ell = x_t.
BijectionPair point_to_pair(std::int64_t t, const LatticePoint &x);
LatticePoint pair_to_point(const BijectionPair &pair);

/// Exhaustive round-trip, height, smallest-part, locate-agreement and
/// counting checks for all heights up to `max_height`.
/// counts[n-1] = number of pairs of height n.
VerificationReport verify_bijection(std::int64_t t, std::int64_t max_height);

/// All pairs of height n, ordered by ell ascending.
std::vector<BijectionPair> enumerate_pairs(std::int64_t t, std::int64_t n);

} // namespace polypart

#endif
