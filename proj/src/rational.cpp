#include "tropt/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tropt {

namespace {

using BigInt = boost::multiprecision::cpp_int;

BigInt pow10(long exp) {
  BigInt r = 1;
  for (long i = 0; i < exp; ++i) r *= 10;
  return r;
}

Rational parse_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch == '.') {
      if (seen_dot) throw std::invalid_argument("bad rational: " + text);
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else {
      break;
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad rational: " + text);
  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    exponent = std::stol(text.substr(pos + 1));
    pos = text.size();
  }
  if (pos != text.size()) throw std::invalid_argument("bad rational: " + text);

  BigInt numerator(digits.empty() ? "0" : digits);
  if (negative) numerator = -numerator;
  const long net = exponent - frac_digits;
  if (net >= 0) return Rational(numerator * pow10(net));
  return Rational(numerator, pow10(-net));
}

}  // namespace

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(num, den);
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace tropt
