#include "polypart/bijection.hpp"

#include <charconv>
#include <string>

namespace polypart {

BijectionPair::BijectionPair(Partition mu_bar, std::int64_t ell, std::int64_t t)
    : mu_bar_(std::move(mu_bar)), ell_(ell), t_(t) {
  if (t_ < 1)
    throw InvalidPair("t must be at least 1");
  if (mu_bar_.empty())
    throw InvalidPair("mu_bar must be non-empty");
  if (mu_bar_.largest() > t_)
    throw InvalidPair("mu_bar has a part larger than t = " + std::to_string(t_));
  if (ell_ < 0 || ell_ % t_ != 0)
    throw InvalidPair("ell must be a non-negative multiple of t = " + std::to_string(t_));
}

BijectionPair BijectionPair::parse(std::string_view text, std::int64_t t) {
  const auto comma = text.rfind(',');
  if (comma == std::string_view::npos)
    throw ParseError("pair must have the form 'PARTITION,ELL'");
  auto ell_text = text.substr(comma + 1);
  while (!ell_text.empty() && ell_text.front() == ' ')
    ell_text.remove_prefix(1);
  std::int64_t ell = 0;
  auto [ptr, ec] = std::from_chars(ell_text.data(), ell_text.data() + ell_text.size(), ell);
  if (ell_text.empty() || ec != std::errc() || ptr != ell_text.data() + ell_text.size())
    throw ParseError("malformed ell in pair '" + std::string(text) + "'");
  return BijectionPair(Partition::parse(text.substr(0, comma)), ell, t);
}

std::string BijectionPair::str() const {
  return mu_bar_.str() + "," + std::to_string(ell_);
}

nlohmann::ordered_json BijectionPair::to_json() const {
  return {{"mu_bar", mu_bar_.str()}, {"ell", ell_}};
}

Decomposition decompose_m(const BijectionPair &pair) {
  const std::int64_t t = pair.t();
  const auto hat = multiplicities(pair.mu_bar(), t);
  const std::int64_t rows = hat.total();
  const std::int64_t q = pair.ell() / t;

  Decomposition d;
  d.K = q / rows;
  const std::int64_t r = q % rows;
  // the j with pre_j <= r < pre_{j+1}, where pre_j = h_1 + ... + h_j
  std::int64_t pre = 0;
  while (pre + hat[d.j + 1] <= r) {
    pre += hat[d.j + 1];
    ++d.j;
  }
  d.alpha_star_j = r - pre;
  d.m = d.K * t + d.j + 1;

  d.alphas.push_back(hat[d.j + 1] - d.alpha_star_j);
  for (std::int64_t i = d.j + 1; i < t; ++i)
    d.alphas.push_back(hat[i + 1]);
  for (std::int64_t i = 0; i < d.j; ++i)
    d.alphas.push_back(hat[i + 1]);
  d.alphas.push_back(d.alpha_star_j);
  return d;
}

Partition pair_to_partition(const BijectionPair &pair) {
  const std::int64_t t = pair.t();
  const auto hat = multiplicities(pair.mu_bar(), t);
  const auto d = decompose_m(pair);
  const std::int64_t base = d.K * t;

  // Rows of the augmented diagram: row length i carries base or base + t.
  // Cutting between the two blocks and stacking the long block on top
  // gives these parts.
  std::vector<std::int64_t> parts;
  auto add = [&](std::int64_t part, std::int64_t count) {
    parts.insert(parts.end(), static_cast<std::size_t>(count), part);
  };
  add(d.m + t, d.alpha_star_j);
  for (std::int64_t i = d.j; i >= 1; --i)
    add(base + t + i, hat[i]);
  for (std::int64_t i = t; i >= d.j + 2; --i)
    add(base + i, hat[i]);
  add(d.m, hat[d.j + 1] - d.alpha_star_j);
  return Partition(std::move(parts));
}

BijectionPair partition_to_pair(std::int64_t t, const Partition &lambda) {
  if (t < 1)
    throw InvalidArgument("t must be at least 1");
  if (lambda.empty())
    throw InvalidPartition("cannot map the empty partition");
  if (lambda.largest() - lambda.smallest() > t)
    throw InvalidPartition("partition " + lambda.str() + " has difference larger than " +
                           std::to_string(t));
  const std::int64_t m = lambda.smallest();
  const std::int64_t K = (m - 1) / t;
  const std::int64_t j = (m - 1) % t;
  const std::int64_t base = K * t;

  std::vector<std::int64_t> hat(static_cast<std::size_t>(t), 0);
  const std::int64_t long_rows = lambda.multiplicity(m + t);
  hat[static_cast<std::size_t>(j)] = lambda.multiplicity(m) + long_rows;
  for (std::int64_t i = j + 2; i <= t; ++i)
    hat[static_cast<std::size_t>(i - 1)] = lambda.multiplicity(base + i);
  std::int64_t pre = 0;
  for (std::int64_t i = 1; i <= j; ++i) {
    hat[static_cast<std::size_t>(i - 1)] = lambda.multiplicity(base + t + i);
    pre += hat[static_cast<std::size_t>(i - 1)];
  }
  auto mu_bar = Partition::from_multiplicities(hat);
  const std::int64_t rows = static_cast<std::int64_t>(mu_bar.length());
  return BijectionPair(std::move(mu_bar), t * (K * rows + pre + long_rows), t);
}

BijectionPair point_to_pair(std::int64_t t, const LatticePoint &x) {
  if (x.t() != t)
    throw InvalidArgument("point must have t + 1 coordinates");
  if (!x.in_lattice())
    throw NotInLattice("last coordinate must be divisible by t");
  if (!in_X(t, x.to_rational()))
    throw NotInX("point is not in X_t");
  std::vector<std::int64_t> mu;
  for (std::int64_t i = 0; i < t; ++i)
    if (x[static_cast<std::size_t>(i)] > 0)
      mu.push_back(x[static_cast<std::size_t>(i)]);
  return BijectionPair(conjugate(Partition(std::move(mu))), x[static_cast<std::size_t>(t)], t);
}

LatticePoint pair_to_point(const BijectionPair &pair) {
  auto coords = conjugate(pair.mu_bar()).parts();
  coords.resize(static_cast<std::size_t>(pair.t()), 0);
  coords.push_back(pair.ell());
  return LatticePoint(std::move(coords));
}

std::vector<BijectionPair> enumerate_pairs(std::int64_t t, std::int64_t n) {
  if (t < 1)
    throw InvalidArgument("t must be at least 1");
  std::vector<BijectionPair> out;
  for (std::int64_t ell = 0; ell <= n - 1; ell += t)
    for (auto &mu : enumerate_parts_at_most(n - ell, t))
      out.emplace_back(std::move(mu), ell, t);
  return out;
}

VerificationReport verify_bijection(std::int64_t t, std::int64_t max_height) {
  if (t < 1 || max_height < 1)
    throw InvalidArgument("verify_bijection needs t >= 1 and max height >= 1");
  VerificationReport report;
  report.parameters = {{"t", t}, {"H", max_height}};
  for (std::int64_t n = 1; n <= max_height; ++n) {
    const auto pairs = enumerate_pairs(t, n);
    report.counts.emplace_back(pairs.size());
    for (const auto &pair : pairs) {
      ++report.checked;
      const auto lambda = pair_to_partition(pair);
      const auto d = decompose_m(pair);
      if (lambda.weight() != n) {
        report.fail({{"reason", "height not preserved"},
                     {"pair", pair.to_json()},
                     {"partition", lambda.str()}});
      }
      if (lambda.smallest() != d.m || lambda.largest() - lambda.smallest() > t) {
        report.fail({{"reason", "image is not a partition with smallest part m and bounded difference"},
                     {"pair", pair.to_json()},
                     {"partition", lambda.str()},
                     {"m", d.m}});
      }
      if (partition_to_pair(t, lambda) != pair) {
        report.fail({{"reason", "partition_to_pair does not invert pair_to_partition"},
                     {"pair", pair.to_json()},
                     {"partition", lambda.str()}});
      }
      const auto point = pair_to_point(pair);
      if (point.height() != n || point_to_pair(t, point) != pair) {
        report.fail({{"reason", "pair/point round trip failed"},
                     {"pair", pair.to_json()},
                     {"point", to_json(point)}});
      }
      const auto m = locate(t, point);
      if (!m || *m != d.m) {
        report.fail({{"reason", "decompose_m disagrees with locate"},
                     {"pair", pair.to_json()},
                     {"point", to_json(point)},
                     {"decompose_m", d.m},
                     {"locate", m ? nlohmann::ordered_json(*m) : nlohmann::ordered_json()}});
      }
    }

    std::uint64_t partitions = 0;
    for_each_bounded(n, t, [&](const Partition &lambda) {
      ++partitions;
      const auto back = pair_to_partition(partition_to_pair(t, lambda));
      if (back != lambda) {
        report.fail({{"reason", "pair_to_partition does not invert partition_to_pair"},
                     {"partition", lambda.str()},
                     {"image", back.str()}});
      }
    });
    if (partitions != pairs.size()) {
      report.fail({{"reason", "pair count differs from partition count"},
                   {"height", n},
                   {"pairs", pairs.size()},
                   {"partitions", partitions}});
    }
    const auto points = enumerate_X_height(t, n);
    for (const auto &x : points) {
      const auto pair = point_to_pair(t, x);
      const auto m = locate(t, x);
      if (pair_to_point(pair) != x || !m || decompose_m(pair).m != *m) {
        report.fail({{"reason", "lattice point disagrees with its pair"},
                     {"point", to_json(x)},
                     {"pair", pair.to_json()}});
      }
    }
  }
  return report;
}

} // namespace polypart
