#ifndef POLYPART_CONES_HPP
#define POLYPART_CONES_HPP

#include "polypart/integer.hpp"
#include "polypart/report.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace polypart {

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

using RationalVector = std::vector<Rational>;

/// An integer point (x_0, ..., x_t) of R^{t+1}.
class LatticePoint {
public:
  explicit LatticePoint(std::vector<std::int64_t> coords);

  std::int64_t t() const { return static_cast<std::int64_t>(coords_.size()) - 1; }
  const std::vector<std::int64_t> &coords() const { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_.at(i); }
  std::int64_t height() const;

  /// Membership in Z^t x tZ.
  bool in_lattice() const { return coords_.back() % t() == 0; }

  RationalVector to_rational() const;

  friend bool operator==(const LatticePoint &, const LatticePoint &) = default;
  friend auto operator<=>(const LatticePoint &, const LatticePoint &) = default;

private:
  std::vector<std::int64_t> coords_;
};

/// b_j in Z^t: j + 1 leading ones, then zeros.
std::vector<std::int64_t> b_vector(std::int64_t t, std::int64_t j);

/// v_i = (b_{(i-1) mod t}, ((i-1) div t) * t); its height is i.
LatticePoint v_vector(std::int64_t t, std::int64_t i);

/// Simplicial cone on t + 1 generators in which a generator flagged open
/// must carry a strictly positive coefficient. Construction inverts the
/// generator matrix exactly.
class HalfOpenCone {
public:
  HalfOpenCone(std::vector<LatticePoint> generators, std::vector<bool> open);

  std::int64_t t() const { return generators_.front().t(); }
  const std::vector<LatticePoint> &generators() const { return generators_; }
  const std::vector<bool> &open() const { return open_; }
  const Integer &determinant() const { return determinant_; }

  /// Coefficients alpha with x = sum alpha_i * generator_i.
  RationalVector coefficients(const RationalVector &x) const;

  /// alpha_i >= 0 for all i, alpha_i > 0 where the facet opposite i is open.
  bool contains(const RationalVector &x) const;

private:
  std::vector<LatticePoint> generators_;
  std::vector<bool> open_;
  std::vector<RationalVector> inverse_; // rows
  Integer determinant_;
};

/// C_m: columns v_m, ..., v_{m+t}, facet opposite v_m open. Throws
/// std::logic_error if |det| != t.
HalfOpenCone generator_matrix(std::int64_t t, std::int64_t m);

/// The block matrix whose columns are (b_j..b_{t-1} over kt) then
/// (b_0..b_j over (k+1)t). V_m equals block_matrix(t, (m-1) mod t, (m-1) div t).
HalfOpenCone block_matrix(std::int64_t t, std::int64_t j, std::int64_t k);

/// Integer coefficients of x in C_m when x is a lattice point of C_m.
std::optional<std::vector<std::int64_t>> cone_coords(std::int64_t t, std::int64_t m,
                                                     const LatticePoint &x);

/// u_{j,k} = -kt e_0 + t e_j + e_t (e_0 and e_j coincide for j = 0).
std::vector<std::int64_t> normal_u(std::int64_t t, std::int64_t j, std::int64_t k);

/// u_m = u_{m mod t, (m div t) + 1}; u_0 = e_t.
std::vector<std::int64_t> normal_u_m(std::int64_t t, std::int64_t m);

enum class Strictness { NonNegative, Negative };

struct Halfspace {
  std::vector<std::int64_t> normal;
  Strictness strictness;

  bool satisfied_by(const RationalVector &x) const;
};

/// Chain x_0 >= ... >= x_{t-1} >= 0 plus <u_{m-1},x> >= 0 and <u_m,x> < 0.
/// Chain inequality i reads x_i >= x_{i+1} for i < t - 1 and x_{t-1} >= 0.
struct InequalitySystem {
  std::int64_t t = 0;
  std::int64_t m = 0;
  std::optional<std::int64_t> dropped_chain;
  std::vector<Halfspace> normals;

  bool contains(const RationalVector &x) const;
};

InequalitySystem inequality_system(std::int64_t t, std::int64_t m,
                                   std::optional<std::int64_t> drop_chain = std::nullopt);

/// Index of the chain inequality that is implied by the others for C_m.
std::int64_t redundant_chain_index(std::int64_t t, std::int64_t m);

bool in_cone_inequalities(std::int64_t t, std::int64_t m, const RationalVector &x);

/// The union of all C_m: chain, x_t >= 0 and x_0 > 0.
bool in_X(std::int64_t t, const RationalVector &x);

/// Lattice points of X_t at height n, ordered by x_t ascending, then the
/// first t coordinates lexicographically decreasing.
std::vector<LatticePoint> enumerate_X_height(std::int64_t t, std::int64_t n);

/// The m with x in C_m, found by scanning m = 1..height(x) with the
/// inequality test.
std::optional<std::int64_t> locate(std::int64_t t, const LatticePoint &x);

/// Every lattice point of X_t up to height H lies in exactly one C_m and
/// the per-height counts equal the bounded-difference partition counts.
VerificationReport verify_tiling(std::int64_t t, std::int64_t max_height);

/// Sampled agreement of generator membership and inequality membership on
/// rational points near C_m, for m = 1..max_m. Also checks that the
/// redundant chain inequality can be dropped. counts = {inside, outside,
/// on a facet}.
VerificationReport verify_cone_descriptions(std::int64_t t, std::int64_t max_m,
                                            std::int64_t samples, std::uint64_t seed);

nlohmann::ordered_json to_json(const LatticePoint &x);

} // namespace polypart

#endif
