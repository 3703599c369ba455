#ifndef POLYPART_SERIES_HPP
#define POLYPART_SERIES_HPP

#include "polypart/integer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polypart {

/// A power series in q known exactly up to and including q^N.
class TruncatedSeries {
public:
  /// The zero series of degree N.
  explicit TruncatedSeries(std::int64_t degree);
  explicit TruncatedSeries(std::vector<Integer> coeffs);

  static TruncatedSeries one(std::int64_t degree);
  static TruncatedSeries monomial(std::int64_t exponent, std::int64_t degree);
  static TruncatedSeries from_ints(const std::vector<std::int64_t> &coeffs);

  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const std::vector<Integer> &coeffs() const { return coeffs_; }
  const Integer &operator[](std::int64_t n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

  TruncatedSeries truncated(std::int64_t degree) const;

  /// Multiplication by q^k, dropping whatever moves past degree N.
  TruncatedSeries shifted(std::int64_t k) const;

  // In-place multiplication by (1 - q^a) and by 1/(1 - q^a). Both agree
  // with multiplying by the corresponding polynomial / geometric_inverse.
  TruncatedSeries &mul_one_minus(std::int64_t a);
  TruncatedSeries &div_one_minus(std::int64_t a);

  TruncatedSeries &operator+=(const TruncatedSeries &rhs);
  TruncatedSeries &operator-=(const TruncatedSeries &rhs);

  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries &rhs) { return lhs += rhs; }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries &rhs) { return lhs -= rhs; }
  friend TruncatedSeries operator*(const TruncatedSeries &lhs, const TruncatedSeries &rhs);
  friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
  std::vector<Integer> coeffs_;
};

/// 1/(1 - q^a) truncated at degree N.
TruncatedSeries geometric_inverse(std::int64_t a, std::int64_t degree);

// Generating functions. Each takes the truncation degree N last.

/// Infinite sum over the smallest part m of q^m / ((1-q^m)...(1-q^{m+t})).
TruncatedSeries bounded_sum_form(std::int64_t t, std::int64_t degree);
/// (1/((1-q)...(1-q^t)) - 1) / (1-q^t).
TruncatedSeries bounded_rational_form(std::int64_t t, std::int64_t degree);
/// Sum over m of q^m / (1 - q^m); coefficient n is the number of divisors.
TruncatedSeries divisor_series(std::int64_t degree);
TruncatedSeries abr_sum_form(std::int64_t t, std::int64_t degree);
TruncatedSeries abr_closed_form(std::int64_t t, std::int64_t degree);
/// Bounded-difference series for t minus the one for t - 1.
TruncatedSeries fixed_difference_series(std::int64_t t, std::int64_t degree);

/// (q)_m = (1-q)(1-q^2)...(1-q^m); (q)_0 = 1.
TruncatedSeries pochhammer(std::int64_t m, std::int64_t degree);

/// Closed form for the number of partitions of n with bounded difference 2.
Integer quasipoly_p2(std::int64_t n);

Integer binomial(std::int64_t n, std::int64_t k);

enum class SeriesForm { Sum, Rational, AbrSum, AbrClosed, Fixed, Divisor };

SeriesForm parse_series_form(const std::string &name);
std::string series_form_name(SeriesForm form);

/// Dispatches to the constructor for `form`; `t` is ignored for Divisor.
TruncatedSeries make_series(SeriesForm form, std::int64_t t, std::int64_t degree);

/// `{"t":..,"N":..,"form":..,"coeffs":["0","1",..]}`.
std::string series_to_json(const TruncatedSeries &series, std::int64_t t, SeriesForm form);

} // namespace polypart

#endif
