#include "polypart/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace polypart {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw InvalidPartition("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw InvalidPartition("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<std::int64_t> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::from_multiplicities(const std::vector<std::int64_t> &counts) {
  std::vector<std::int64_t> parts;
  for (std::size_t i = counts.size(); i-- > 0;) {
    if (counts[i] < 0)
      throw InvalidPartition("negative multiplicity");
    parts.insert(parts.end(), static_cast<std::size_t>(counts[i]),
                 static_cast<std::int64_t>(i + 1));
  }
  return Partition(std::move(parts));
}

namespace {

std::int64_t parse_number(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParseError("malformed partition '" + std::string(whole) + "'");
  return value;
}

} // namespace

Partition Partition::parse(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos)
    throw ParseError("empty partition string");
  const std::string_view body = text.substr(first, last - first + 1);
  if (body == "0")
    return {};

  std::vector<std::int64_t> parts;
  std::int64_t previous = 0;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t plus = body.find('+', pos);
    if (plus == std::string_view::npos)
      plus = body.size();
    std::string_view term = body.substr(pos, plus - pos);
    std::size_t caret = term.find('^');
    std::int64_t part = parse_number(term.substr(0, caret), body);
    std::int64_t mult = 1;
    if (caret != std::string_view::npos)
      mult = parse_number(term.substr(caret + 1), body);
    if (part < 1 || mult < 1)
      throw ParseError("parts and multiplicities must be positive in '" +
                       std::string(body) + "'");
    if (previous != 0 && part >= previous)
      throw ParseError("parts must be strictly decreasing in '" + std::string(body) + "'");
    previous = part;
    parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
    pos = plus + 1;
  }
  return Partition(std::move(parts));
}

std::int64_t Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

std::int64_t Partition::largest() const {
  if (parts_.empty())
    throw InvalidPartition("empty partition has no largest part");
  return parts_.front();
}

std::int64_t Partition::smallest() const {
  if (parts_.empty())
    throw InvalidPartition("empty partition has no smallest part");
  return parts_.back();
}

std::int64_t Partition::multiplicity(std::int64_t part) const {
  return std::count(parts_.begin(), parts_.end(), part);
}

std::string Partition::str() const {
  if (parts_.empty())
    return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i])
      ++j;
    if (i != 0)
      out << '+';
    out << parts_[i];
    if (j - i > 1)
      out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

std::int64_t MultiplicityVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

Partition conjugate(const Partition &p) {
  if (p.empty())
    return {};
  std::vector<std::int64_t> result(static_cast<std::size_t>(p.largest()), 0);
  // parts are sorted, so column j is filled by a prefix of the rows
  for (std::int64_t part : p.parts())
    for (std::int64_t j = 0; j < part; ++j)
      ++result[static_cast<std::size_t>(j)];
  return Partition(std::move(result));
}

MultiplicityVector multiplicities(const Partition &p, std::int64_t t) {
  MultiplicityVector hat{t, std::vector<std::int64_t>(static_cast<std::size_t>(t), 0)};
  for (std::int64_t part : p.parts()) {
    if (part > t)
      throw PartTooLarge("part " + std::to_string(part) + " exceeds bound " +
                         std::to_string(t));
    ++hat.counts[static_cast<std::size_t>(part - 1)];
  }
  return hat;
}

namespace {

// Fills `parts` with the rest of a partition of `remaining` using parts in
// [low, high], largest first.
void extend(std::int64_t remaining, std::int64_t low, std::int64_t high,
            std::vector<std::int64_t> &parts,
            const std::function<void(const std::vector<std::int64_t> &)> &visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (std::int64_t part = std::min(high, remaining); part >= low; --part) {
    parts.push_back(part);
    extend(remaining - part, low, part, parts, visit);
    parts.pop_back();
  }
}

} // namespace

void for_each_bounded(std::int64_t n, std::int64_t t,
                      const std::function<void(const Partition &)> &visit) {
  if (n < 1 || t < 0)
    return;
  std::vector<std::int64_t> parts;
  for (std::int64_t largest = n; largest >= 1; --largest) {
    parts.assign(1, largest);
    extend(n - largest, std::max<std::int64_t>(1, largest - t), largest, parts,
           [&](const std::vector<std::int64_t> &ps) { visit(Partition(ps)); });
  }
}

std::vector<Partition> enumerate_bounded(std::int64_t n, std::int64_t t) {
  std::vector<Partition> out;
  for_each_bounded(n, t, [&](const Partition &p) { out.push_back(p); });
  return out;
}

std::vector<Partition> enumerate_parts_at_most(std::int64_t n, std::int64_t max_part) {
  std::vector<Partition> out;
  if (n < 0 || max_part < 0)
    return out;
  if (n > 0 && max_part == 0)
    return out;
  std::vector<std::int64_t> parts;
  extend(n, 1, max_part, parts,
         [&](const std::vector<std::int64_t> &ps) { out.emplace_back(ps); });
  return out;
}

Integer count_bounded(std::int64_t n, std::int64_t t) {
  std::uint64_t count = 0;
  for_each_bounded(n, t, [&](const Partition &) { ++count; });
  return Integer(count);
}

Integer count_fixed(std::int64_t n, std::int64_t t) {
  std::uint64_t count = 0;
  for_each_bounded(n, t, [&](const Partition &p) {
    if (p.largest() - p.smallest() == t)
      ++count;
  });
  return Integer(count);
}

Integer count_smallest_part(std::int64_t n, std::int64_t t, std::int64_t m) {
  std::uint64_t count = 0;
  for_each_bounded(n, t, [&](const Partition &p) {
    if (p.smallest() == m)
      ++count;
  });
  return Integer(count);
}

std::int64_t divisor_count(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0)
      count += (d * d == n) ? 1 : 2;
  }
  return count;
}

} // namespace polypart
