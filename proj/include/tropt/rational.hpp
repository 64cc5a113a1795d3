#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace tropt {

// Exact rational arithmetic for the probability formulas.
using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

// Accepts "a/b", integers, and decimal literals with optional exponent
// ("1/2", "3", "0.25", "1e-9"). Decimals convert exactly via powers of ten.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

}  // namespace tropt
