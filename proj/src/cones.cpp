#include "polypart/cones.hpp"

#include "polypart/partition.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace polypart {

namespace {

void require(bool condition, const std::string &message) {
  if (!condition)
    throw InvalidArgument(message);
}

void require_dimension(std::int64_t t, std::size_t size) {
  require(t >= 1, "t must be at least 1");
  require(static_cast<std::int64_t>(size) == t + 1,
          "point must have t + 1 = " + std::to_string(t + 1) + " coordinates");
}

Rational dot(const std::vector<std::int64_t> &u, const RationalVector &x) {
  Rational sum = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0)
      sum += x[i] * u[i];
  return sum;
}

nlohmann::ordered_json rational_json(const RationalVector &x) {
  auto out = nlohmann::ordered_json::array();
  for (const auto &v : x)
    out.push_back(v.str());
  return out;
}

} // namespace

LatticePoint::LatticePoint(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  require(coords_.size() >= 2, "a lattice point needs t + 1 >= 2 coordinates");
}

std::int64_t LatticePoint::height() const {
  return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0});
}

RationalVector LatticePoint::to_rational() const {
  return RationalVector(coords_.begin(), coords_.end());
}

std::vector<std::int64_t> b_vector(std::int64_t t, std::int64_t j) {
  if (t < 1 || j < 0 || j >= t)
    throw IndexOutOfRange("b_vector index " + std::to_string(j) + " outside 0.." +
                          std::to_string(t - 1));
  std::vector<std::int64_t> b(static_cast<std::size_t>(t), 0);
  std::fill(b.begin(), b.begin() + j + 1, 1);
  return b;
}

LatticePoint v_vector(std::int64_t t, std::int64_t i) {
  require(t >= 1, "t must be at least 1");
  require(i >= 1, "generator index must be at least 1");
  auto coords = b_vector(t, (i - 1) % t);
  coords.push_back(((i - 1) / t) * t);
  return LatticePoint(std::move(coords));
}

HalfOpenCone::HalfOpenCone(std::vector<LatticePoint> generators, std::vector<bool> open)
    : generators_(std::move(generators)), open_(std::move(open)) {
  require(!generators_.empty(), "a cone needs generators");
  const std::size_t dim = generators_.size();
  require(static_cast<std::int64_t>(dim) == t() + 1, "a simplicial cone needs t + 1 generators");
  require(open_.size() == dim, "one openness flag per generator");

  // Gauss-Jordan on [A | I] with A's columns the generators.
  std::vector<RationalVector> a(dim, RationalVector(dim));
  std::vector<RationalVector> inv(dim, RationalVector(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    require(generators_[r].coords().size() == dim, "generators must share a dimension");
    for (std::size_t c = 0; c < dim; ++c)
      a[r][c] = generators_[c][r];
    inv[r][r] = 1;
  }
  Rational det = 1;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && a[pivot][col] == 0)
      ++pivot;
    if (pivot == dim)
      throw InvalidArgument("cone generators are linearly dependent");
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      std::swap(inv[pivot], inv[col]);
      det = -det;
    }
    const Rational p = a[col][col];
    det *= p;
    for (std::size_t c = 0; c < dim; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == col || a[r][col] == 0)
        continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < dim; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  inverse_ = std::move(inv);
  determinant_ = boost::multiprecision::numerator(det);
}

RationalVector HalfOpenCone::coefficients(const RationalVector &x) const {
  require(x.size() == inverse_.size(), "point dimension does not match cone");
  RationalVector alpha(x.size());
  for (std::size_t r = 0; r < inverse_.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c)
      alpha[r] += inverse_[r][c] * x[c];
  return alpha;
}

bool HalfOpenCone::contains(const RationalVector &x) const {
  const auto alpha = coefficients(x);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0 || (open_[i] && alpha[i] == 0))
      return false;
  }
  return true;
}

namespace {

std::vector<bool> first_open(std::int64_t t) {
  std::vector<bool> open(static_cast<std::size_t>(t + 1), false);
  open[0] = true;
  return open;
}

LatticePoint lift(std::vector<std::int64_t> b, std::int64_t last) {
  b.push_back(last);
  return LatticePoint(std::move(b));
}

} // namespace

HalfOpenCone generator_matrix(std::int64_t t, std::int64_t m) {
  require(t >= 1, "t must be at least 1");
  require(m >= 1, "cone index must be at least 1");
  std::vector<LatticePoint> columns;
  for (std::int64_t i = m; i <= m + t; ++i)
    columns.push_back(v_vector(t, i));
  HalfOpenCone cone(std::move(columns), first_open(t));
  if (abs(cone.determinant()) != t)
    throw std::logic_error("generator matrix V_" + std::to_string(m) +
                           " does not have determinant +-t");
  return cone;
}

HalfOpenCone block_matrix(std::int64_t t, std::int64_t j, std::int64_t k) {
  require(t >= 1 && j >= 0 && j < t, "block index out of range");
  std::vector<LatticePoint> columns;
  for (std::int64_t l = j; l < t; ++l)
    columns.push_back(lift(b_vector(t, l), k * t));
  for (std::int64_t l = 0; l <= j; ++l)
    columns.push_back(lift(b_vector(t, l), (k + 1) * t));
  return HalfOpenCone(std::move(columns), first_open(t));
}

std::optional<std::vector<std::int64_t>> cone_coords(std::int64_t t, std::int64_t m,
                                                     const LatticePoint &x) {
  require_dimension(t, x.coords().size());
  if (!x.in_lattice())
    return std::nullopt;
  const auto alpha = generator_matrix(t, m).coefficients(x.to_rational());
  std::vector<std::int64_t> out;
  for (const auto &a : alpha) {
    if (boost::multiprecision::denominator(a) != 1)
      throw std::logic_error("lattice point has non-integral cone coordinates");
    out.push_back(static_cast<std::int64_t>(boost::multiprecision::numerator(a)));
  }
  if (out[0] < 1)
    return std::nullopt;
  for (std::int64_t a : out)
    if (a < 0)
      return std::nullopt;
  return out;
}

std::vector<std::int64_t> normal_u(std::int64_t t, std::int64_t j, std::int64_t k) {
  if (t < 1 || j < 0 || j >= t)
    throw IndexOutOfRange("normal index j=" + std::to_string(j) + " outside 0.." +
                          std::to_string(t - 1));
  std::vector<std::int64_t> u(static_cast<std::size_t>(t + 1), 0);
  u[0] -= k * t;
  u[static_cast<std::size_t>(j)] += t;
  u[static_cast<std::size_t>(t)] += 1;
  return u;
}

std::vector<std::int64_t> normal_u_m(std::int64_t t, std::int64_t m) {
  require(t >= 1, "t must be at least 1");
  require(m >= 0, "normal index m must be non-negative");
  return normal_u(t, m % t, m / t + 1);
}

bool Halfspace::satisfied_by(const RationalVector &x) const {
  const Rational value = dot(normal, x);
  return strictness == Strictness::NonNegative ? value >= 0 : value < 0;
}

bool InequalitySystem::contains(const RationalVector &x) const {
  require_dimension(t, x.size());
  for (const auto &h : normals)
    if (!h.satisfied_by(x))
      return false;
  return true;
}

std::int64_t redundant_chain_index(std::int64_t t, std::int64_t m) {
  require(t >= 1 && m >= 1, "redundant_chain_index needs t, m >= 1");
  return (m - 1) % t;
}

InequalitySystem inequality_system(std::int64_t t, std::int64_t m,
                                   std::optional<std::int64_t> drop_chain) {
  require(t >= 1, "t must be at least 1");
  require(m >= 1, "cone index must be at least 1");
  InequalitySystem sys{t, m, drop_chain, {}};
  for (std::int64_t i = 0; i < t; ++i) {
    if (drop_chain && *drop_chain == i)
      continue;
    std::vector<std::int64_t> normal(static_cast<std::size_t>(t + 1), 0);
    normal[static_cast<std::size_t>(i)] = 1;
    if (i + 1 < t)
      normal[static_cast<std::size_t>(i + 1)] = -1;
    sys.normals.push_back({std::move(normal), Strictness::NonNegative});
  }
  sys.normals.push_back({normal_u_m(t, m - 1), Strictness::NonNegative});
  sys.normals.push_back({normal_u_m(t, m), Strictness::Negative});
  return sys;
}

bool in_cone_inequalities(std::int64_t t, std::int64_t m, const RationalVector &x) {
  return inequality_system(t, m).contains(x);
}

bool in_X(std::int64_t t, const RationalVector &x) {
  require_dimension(t, x.size());
  for (std::int64_t i = 0; i + 1 < t; ++i)
    if (x[static_cast<std::size_t>(i)] < x[static_cast<std::size_t>(i + 1)])
      return false;
  return x[static_cast<std::size_t>(t - 1)] >= 0 && x[static_cast<std::size_t>(t)] >= 0 &&
         x[0] > 0;
}

namespace {

// Weakly decreasing non-negative vectors of length `slots` summing to
// `remaining`, entries bounded by `high`.
void fill_chain(std::int64_t remaining, std::int64_t high, std::size_t slots,
                std::vector<std::int64_t> &prefix,
                const std::function<void(const std::vector<std::int64_t> &)> &visit) {
  if (slots == 0) {
    if (remaining == 0)
      visit(prefix);
    return;
  }
  const auto left = static_cast<std::int64_t>(slots);
  for (std::int64_t v = std::min(high, remaining); v >= 0; --v) {
    if (v * left < remaining)
      break;
    prefix.push_back(v);
    fill_chain(remaining - v, v, slots - 1, prefix, visit);
    prefix.pop_back();
  }
}

} // namespace

std::vector<LatticePoint> enumerate_X_height(std::int64_t t, std::int64_t n) {
  require(t >= 1, "t must be at least 1");
  require(n >= 1, "height must be at least 1");
  std::vector<LatticePoint> out;
  std::vector<std::int64_t> prefix;
  // x_0 >= 1 forces the chain part to have weight at least 1.
  for (std::int64_t last = 0; last <= n - 1; last += t) {
    fill_chain(n - last, n - last, static_cast<std::size_t>(t), prefix,
               [&](const std::vector<std::int64_t> &chain) {
                 auto coords = chain;
                 coords.push_back(last);
                 out.emplace_back(std::move(coords));
               });
  }
  return out;
}

std::optional<std::int64_t> locate(std::int64_t t, const LatticePoint &x) {
  require_dimension(t, x.coords().size());
  const auto rx = x.to_rational();
  if (!x.in_lattice() || !in_X(t, rx))
    return std::nullopt;
  for (std::int64_t m = 1; m <= x.height(); ++m)
    if (in_cone_inequalities(t, m, rx))
      return m;
  return std::nullopt;
}

nlohmann::ordered_json to_json(const LatticePoint &x) { return x.coords(); }

VerificationReport verify_tiling(std::int64_t t, std::int64_t max_height) {
  require(t >= 1, "t must be at least 1");
  require(max_height >= 1, "max height must be at least 1");
  VerificationReport report;
  report.parameters = {{"t", t}, {"H", max_height}};
  for (std::int64_t n = 1; n <= max_height; ++n) {
    const auto points = enumerate_X_height(t, n);
    report.counts.emplace_back(points.size());
    const Integer expected = count_bounded(n, t);
    if (Integer(points.size()) != expected) {
      report.fail({{"reason", "point count differs from partition count"},
                   {"height", n},
                   {"points", points.size()},
                   {"partitions", expected.str()}});
    }
    for (const auto &x : points) {
      ++report.checked;
      const auto rx = x.to_rational();
      std::vector<std::int64_t> hits;
      for (std::int64_t m = 1; m <= n; ++m)
        if (in_cone_inequalities(t, m, rx))
          hits.push_back(m);
      if (hits.size() != 1) {
        report.fail({{"reason", "point does not lie in exactly one cone"},
                     {"point", to_json(x)},
                     {"cones", hits}});
        continue;
      }
      if (!cone_coords(t, hits.front(), x)) {
        report.fail({{"reason", "inequality membership without generator membership"},
                     {"point", to_json(x)},
                     {"m", hits.front()}});
      }
    }
  }
  return report;
}

namespace {

Rational random_rational(std::mt19937_64 &rng, std::int64_t low, std::int64_t high) {
  std::uniform_int_distribution<std::int64_t> den_dist(1, 6);
  const std::int64_t den = den_dist(rng);
  std::uniform_int_distribution<std::int64_t> num_dist(low * den, high * den);
  return Rational(num_dist(rng), den);
}

// Mixes points built from generator coefficients (so that some land
// exactly on facets) with points drawn uniformly from a box around C_m.
RationalVector sample_point(std::mt19937_64 &rng, const HalfOpenCone &cone, std::int64_t m) {
  const std::size_t dim = cone.generators().size();
  std::uniform_int_distribution<int> coin(0, 9);
  RationalVector x(dim);
  if (coin(rng) < 6) {
    for (std::size_t i = 0; i < dim; ++i) {
      Rational alpha = coin(rng) < 3 ? Rational(0) : random_rational(rng, -1, 4);
      for (std::size_t r = 0; r < dim; ++r)
        x[r] += alpha * cone.generators()[i][r];
    }
  } else {
    const auto reach = m + static_cast<std::int64_t>(dim) + 2;
    for (std::size_t r = 0; r < dim; ++r)
      x[r] = random_rational(rng, -2, reach);
  }
  return x;
}

} // namespace

VerificationReport verify_cone_descriptions(std::int64_t t, std::int64_t max_m,
                                            std::int64_t samples, std::uint64_t seed) {
  require(t >= 1, "t must be at least 1");
  require(max_m >= 1, "max m must be at least 1");
  require(samples >= 1, "need at least one sample");
  VerificationReport report;
  report.parameters = {{"t", t},
                       {"max_m", max_m},
                       {"samples", samples},
                       {"seed", static_cast<std::int64_t>(seed)}};
  std::uint64_t inside = 0, outside = 0, facet = 0;
  for (std::int64_t m = 1; m <= max_m; ++m) {
    std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(t) << 32) ^
                        static_cast<std::uint64_t>(m));
    const auto cone = generator_matrix(t, m);
    const auto full = inequality_system(t, m);
    const auto reduced = inequality_system(t, m, redundant_chain_index(t, m));
    for (std::int64_t s = 0; s < samples; ++s) {
      const auto x = sample_point(rng, cone, m);
      const bool by_generators = cone.contains(x);
      const bool by_inequalities = full.contains(x);
      const bool by_reduced = reduced.contains(x);
      ++report.checked;
      by_generators ? ++inside : ++outside;
      const auto alpha = cone.coefficients(x);
      bool closed = true, boundary = false;
      for (const auto &a : alpha) {
        closed = closed && a >= 0;
        boundary = boundary || a == 0;
      }
      if (closed && boundary)
        ++facet;
      if (by_generators != by_inequalities || by_inequalities != by_reduced) {
        report.fail({{"reason", by_generators != by_inequalities
                                    ? "generator and inequality descriptions disagree"
                                    : "dropping the redundant chain inequality changed membership"},
                     {"m", m},
                     {"point", rational_json(x)},
                     {"alpha", rational_json(alpha)},
                     {"generators", by_generators},
                     {"inequalities", by_inequalities},
                     {"reduced", by_reduced}});
      }
    }
  }
  report.counts = {Integer(inside), Integer(outside), Integer(facet)};
  return report;
}

} // namespace polypart
