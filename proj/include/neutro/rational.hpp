#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace neutro {

/// Exact rational used for every membership value and threshold.
using Rational = boost::multiprecision::cpp_rational;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: a value violates a documented precondition or invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Parses "-0.725", "1.2e-1", "6/15" or "3" into an exact rational.
Rational parse_rational(std::string_view text);

/// Exact decimal text when the denominator has only factors 2 and 5,
/// "p/q" otherwise.
std::string to_string(const Rational& value);

/// True when to_string(value) is a terminating decimal.
bool has_finite_decimal(const Rational& value);

double to_double(const Rational& value);

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace neutro
