#include "polypart/series.hpp"

#include <json.hpp>

#include <algorithm>

namespace polypart {

namespace {

void require(bool condition, const char *message) {
  if (!condition)
    throw InvalidArgument(message);
}

} // namespace

TruncatedSeries::TruncatedSeries(std::int64_t degree) {
  require(degree >= 0, "truncation degree must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(degree + 1), Integer(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  require(!coeffs_.empty(), "a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::one(std::int64_t degree) { return monomial(0, degree); }

TruncatedSeries TruncatedSeries::monomial(std::int64_t exponent, std::int64_t degree) {
  require(exponent >= 0, "monomial exponent must be non-negative");
  TruncatedSeries s(degree);
  if (exponent <= degree)
    s.coeffs_[static_cast<std::size_t>(exponent)] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_ints(const std::vector<std::int64_t> &coeffs) {
  return TruncatedSeries(std::vector<Integer>(coeffs.begin(), coeffs.end()));
}

TruncatedSeries TruncatedSeries::truncated(std::int64_t degree) const {
  require(degree >= 0 && degree <= this->degree(), "can only truncate to a lower degree");
  return TruncatedSeries(
      std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + degree + 1));
}

TruncatedSeries TruncatedSeries::shifted(std::int64_t k) const {
  require(k >= 0, "shift must be non-negative");
  TruncatedSeries out(degree());
  for (std::int64_t n = k; n <= degree(); ++n)
    out.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n - k)];
  return out;
}

TruncatedSeries &TruncatedSeries::mul_one_minus(std::int64_t a) {
  require(a >= 1, "factor exponent must be positive");
  for (std::int64_t n = degree(); n >= a; --n)
    coeffs_[static_cast<std::size_t>(n)] -= coeffs_[static_cast<std::size_t>(n - a)];
  return *this;
}

TruncatedSeries &TruncatedSeries::div_one_minus(std::int64_t a) {
  require(a >= 1, "factor exponent must be positive");
  // c_n <- c_n + c_{n-a} + c_{n-2a} + ..., accumulated in increasing n
  for (std::int64_t n = a; n <= degree(); ++n)
    coeffs_[static_cast<std::size_t>(n)] += coeffs_[static_cast<std::size_t>(n - a)];
  return *this;
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &rhs) {
  require(degree() == rhs.degree(), "series degrees differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &rhs) {
  require(degree() == rhs.degree(), "series degrees differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries &lhs, const TruncatedSeries &rhs) {
  require(lhs.degree() == rhs.degree(), "series degrees differ");
  const std::size_t size = lhs.coeffs_.size();
  TruncatedSeries out(lhs.degree());
  for (std::size_t i = 0; i < size; ++i) {
    if (lhs.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; i + j < size; ++j)
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return out;
}

TruncatedSeries geometric_inverse(std::int64_t a, std::int64_t degree) {
  require(a >= 1, "geometric_inverse needs a >= 1");
  std::vector<Integer> coeffs(static_cast<std::size_t>(degree + 1), Integer(0));
  for (std::int64_t k = 0; k <= degree; k += a)
    coeffs[static_cast<std::size_t>(k)] = 1;
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries pochhammer(std::int64_t m, std::int64_t degree) {
  require(m >= 0, "pochhammer index must be non-negative");
  auto s = TruncatedSeries::one(degree);
  for (std::int64_t i = 1; i <= m; ++i)
    s.mul_one_minus(i);
  return s;
}

TruncatedSeries bounded_sum_form(std::int64_t t, std::int64_t degree) {
  require(t >= 1, "bounded_sum_form needs t >= 1");
  TruncatedSeries total(degree);
  // The m-th term starts at q^m, so terms with m > N vanish after truncation.
  for (std::int64_t m = 1; m <= degree; ++m) {
    auto term = TruncatedSeries::monomial(m, degree);
    for (std::int64_t i = 0; i <= t; ++i)
      term.div_one_minus(m + i);
    total += term;
  }
  return total;
}

TruncatedSeries bounded_rational_form(std::int64_t t, std::int64_t degree) {
  require(t >= 1, "bounded_rational_form needs t >= 1");
  auto s = TruncatedSeries::one(degree);
  for (std::int64_t i = 1; i <= t; ++i)
    s.div_one_minus(i);
  s -= TruncatedSeries::one(degree);
  s.div_one_minus(t);
  return s;
}

TruncatedSeries divisor_series(std::int64_t degree) {
  TruncatedSeries total(degree);
  for (std::int64_t m = 1; m <= degree; ++m)
    total += TruncatedSeries::monomial(m, degree).div_one_minus(m);
  return total;
}

TruncatedSeries abr_sum_form(std::int64_t t, std::int64_t degree) {
  require(t > 1, "abr_sum_form needs t > 1");
  TruncatedSeries total(degree);
  // q^t * q^{2m} (q)_{m-1} / (q)_{m+t} has lowest term q^{t+2m}.
  for (std::int64_t m = 1; t + 2 * m <= degree; ++m) {
    auto term = TruncatedSeries::monomial(t + 2 * m, degree);
    for (std::int64_t i = 1; i <= m - 1; ++i)
      term.mul_one_minus(i);
    for (std::int64_t i = 1; i <= m + t; ++i)
      term.div_one_minus(i);
    total += term;
  }
  return total;
}

TruncatedSeries abr_closed_form(std::int64_t t, std::int64_t degree) {
  require(t > 1, "abr_closed_form needs t > 1");
  // first = q^{t-1}(1-q) / ((1-q^{t-1})(1-q^t))
  auto first = TruncatedSeries::monomial(t - 1, degree);
  first.mul_one_minus(1).div_one_minus(t - 1).div_one_minus(t);

  // second = first / (q)_t
  auto second = first;
  for (std::int64_t i = 1; i <= t; ++i)
    second.div_one_minus(i);

  // third = q^t / ((1-q^{t-1}) (q)_t)
  auto third = TruncatedSeries::monomial(t, degree);
  third.div_one_minus(t - 1);
  for (std::int64_t i = 1; i <= t; ++i)
    third.div_one_minus(i);

  return first - second + third;
}

TruncatedSeries fixed_difference_series(std::int64_t t, std::int64_t degree) {
  require(t >= 1, "fixed_difference_series needs t >= 1");
  auto lower = t == 1 ? divisor_series(degree) : bounded_rational_form(t - 1, degree);
  return bounded_rational_form(t, degree) - lower;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  Integer result = 1;
  for (std::int64_t i = 1; i <= k; ++i)
    result = result * (n - k + i) / i;
  return result;
}

Integer quasipoly_p2(std::int64_t n) {
  require(n >= 1, "quasipoly_p2 needs n >= 1");
  const std::int64_t k = n / 2;
  if (n % 2 == 0)
    return 2 * binomial(k + 1, 2) - binomial(k, 2);
  return binomial(k + 2, 2);
}

SeriesForm parse_series_form(const std::string &name) {
  if (name == "sum")
    return SeriesForm::Sum;
  if (name == "rational")
    return SeriesForm::Rational;
  if (name == "abr-sum")
    return SeriesForm::AbrSum;
  if (name == "abr-closed")
    return SeriesForm::AbrClosed;
  if (name == "fixed")
    return SeriesForm::Fixed;
  if (name == "divisor")
    return SeriesForm::Divisor;
  throw ParseError("unknown series form '" + name + "'");
}

std::string series_form_name(SeriesForm form) {
  switch (form) {
  case SeriesForm::Sum:
    return "sum";
  case SeriesForm::Rational:
    return "rational";
  case SeriesForm::AbrSum:
    return "abr-sum";
  case SeriesForm::AbrClosed:
    return "abr-closed";
  case SeriesForm::Fixed:
    return "fixed";
  case SeriesForm::Divisor:
    return "divisor";
  }
  return "unknown";
}

TruncatedSeries make_series(SeriesForm form, std::int64_t t, std::int64_t degree) {
  switch (form) {
  case SeriesForm::Sum:
    return bounded_sum_form(t, degree);
  case SeriesForm::Rational:
    return bounded_rational_form(t, degree);
  case SeriesForm::AbrSum:
    return abr_sum_form(t, degree);
  case SeriesForm::AbrClosed:
    return abr_closed_form(t, degree);
  case SeriesForm::Fixed:
    return fixed_difference_series(t, degree);
  case SeriesForm::Divisor:
    return divisor_series(degree);
  }
  throw InvalidArgument("unknown series form");
}

std::string series_to_json(const TruncatedSeries &series, std::int64_t t, SeriesForm form) {
  nlohmann::ordered_json doc;
  doc["t"] = t;
  doc["N"] = series.degree();
  doc["form"] = series_form_name(form);
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto &c : series.coeffs())
    coeffs.push_back(c.str());
  doc["coeffs"] = std::move(coeffs);
  return doc.dump();
}

} // namespace polypart
