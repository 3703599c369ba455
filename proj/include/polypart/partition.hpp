#ifndef POLYPART_PARTITION_HPP
#define POLYPART_PARTITION_HPP

#include "polypart/integer.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace polypart {

class InvalidPartition : public Error {
public:
  using Error::Error;
};

class PartTooLarge : public Error {
public:
  using Error::Error;
};

/// A weakly decreasing finite sequence of positive integers. The empty
/// sequence is the empty partition of 0.
class Partition {
public:
  Partition() = default;

  /// Throws InvalidPartition unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<std::int64_t> parts);

  /// Sorts into canonical order first; still rejects non-positive parts.
  static Partition from_unsorted(std::vector<std::int64_t> parts);

  /// `counts[i]` copies of the part `i + 1`.
  static Partition from_multiplicities(const std::vector<std::int64_t> &counts);

  /// Parses `17^5+16^6+15`; "0" is the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<std::int64_t> &parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  std::int64_t weight() const;
  // Both require a non-empty partition.
  std::int64_t largest() const;
  std::int64_t smallest() const;
  std::int64_t multiplicity(std::int64_t part) const;

  /// Renders in the `part^mult` grammar accepted by parse().
  std::string str() const;

  friend bool operator==(const Partition &, const Partition &) = default;
  friend auto operator<=>(const Partition &, const Partition &) = default;

private:
  std::vector<std::int64_t> parts_;
};

/// Multiplicities (h_1, ..., h_t) of the part sizes 1..t.
struct MultiplicityVector {
  std::int64_t t = 0;
  std::vector<std::int64_t> counts;

  std::int64_t operator[](std::int64_t part) const { return counts.at(part - 1); }
  std::int64_t total() const;

  friend bool operator==(const MultiplicityVector &, const MultiplicityVector &) = default;
};

Partition conjugate(const Partition &p);

/// Throws PartTooLarge if some part exceeds t.
MultiplicityVector multiplicities(const Partition &p, std::int64_t t);

/// Visits the non-empty partitions of n with largest - smallest <= t in
/// lexicographically decreasing order.
void for_each_bounded(std::int64_t n, std::int64_t t,
                      const std::function<void(const Partition &)> &visit);

std::vector<Partition> enumerate_bounded(std::int64_t n, std::int64_t t);

/// All partitions of n whose parts are at most `max_part` (includes the
/// empty partition when n == 0), lexicographically decreasing.
std::vector<Partition> enumerate_parts_at_most(std::int64_t n, std::int64_t max_part);

// Brute-force counts; all return 0 for n <= 0.
Integer count_bounded(std::int64_t n, std::int64_t t);
Integer count_fixed(std::int64_t n, std::int64_t t);
Integer count_smallest_part(std::int64_t n, std::int64_t t, std::int64_t m);

std::int64_t divisor_count(std::int64_t n);

} // namespace polypart

#endif
