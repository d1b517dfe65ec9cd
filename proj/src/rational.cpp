#include "neutro/rational.hpp"

#include <cctype>

namespace neutro {

namespace {

using boost::multiprecision::cpp_int;

cpp_int pow10(unsigned n) {
  cpp_int r = 1;
  for (unsigned k = 0; k < n; ++k) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  cpp_int digits = 0;
  unsigned frac_digits = 0;
  bool any_digit = false;
  bool in_fraction = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = digits * 10 + (c - '0');
      any_digit = true;
      if (in_fraction) ++frac_digits;
    } else if (c == '.' && !in_fraction) {
      in_fraction = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw ValidationError("not a number: '" + std::string(whole) + "'");
  long exponent = 0;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      exp_negative = s[pos] == '-';
      ++pos;
    }
    bool any_exp = false;
    for (; pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])); ++pos) {
      exponent = exponent * 10 + (s[pos] - '0');
      any_exp = true;
      if (exponent > 4000) throw ValidationError("exponent out of range: '" + std::string(whole) + "'");
    }
    if (!any_exp) throw ValidationError("malformed exponent: '" + std::string(whole) + "'");
    if (exp_negative) exponent = -exponent;
  }
  if (pos != s.size()) throw ValidationError("trailing characters in number: '" + std::string(whole) + "'");

  exponent -= static_cast<long>(frac_digits);
  Rational value = exponent >= 0 ? Rational(digits * pow10(static_cast<unsigned>(exponent)))
                                 : Rational(digits, pow10(static_cast<unsigned>(-exponent)));
  return negative ? Rational(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ValidationError("empty number");
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Rational num = parse_decimal(trim(s.substr(0, slash)), text);
    const Rational den = parse_decimal(trim(s.substr(slash + 1)), text);
    if (den == 0) throw ValidationError("zero denominator: '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(s, text);
}

bool has_finite_decimal(const Rational& value) {
  cpp_int den = boost::multiprecision::denominator(value);
  while (den % 2 == 0) den /= 2;
  while (den % 5 == 0) den /= 5;
  return den == 1;
}

std::string to_string(const Rational& value) {
  const cpp_int num = boost::multiprecision::numerator(value);
  const cpp_int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  if (!has_finite_decimal(value)) return num.str() + "/" + den.str();

  unsigned places = 0;
  cpp_int scale = 1;
  while ((num * scale) % den != 0) {
    scale *= 10;
    ++places;
  }
  cpp_int scaled = abs(num) * scale / den;
  std::string digits = scaled.str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return (num < 0 ? "-" : "") + digits;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace neutro
