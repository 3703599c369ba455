#ifndef POLYPART_INTEGER_HPP
#define POLYPART_INTEGER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace polypart {

// Arbitrary precision; every count and series coefficient uses these.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Base of every domain error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

// A precondition on a numeric argument (t >= 1, n >= 1, ...) was violated.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

inline std::string to_string(const Integer &value) { return value.str(); }

} // namespace polypart

#endif
