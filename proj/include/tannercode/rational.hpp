#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tanner {

using BigInt = boost::multiprecision::cpp_int;

// Exact arithmetic for expansion factors, vote levels, LP certificates and
// all threshold comparisons. Never rounded except at output boundaries.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "3/4", "0.8", "2", "1e-3"-free decimal strings. "0.8" parses to
// exactly 4/5, so CLI grids stay exact end to end.
Rational parse_rational(const std::string& text);

double to_double(const Rational& r);

// "num/den" (or just "num" for integers); used in JSON reports.
std::string rational_str(const Rational& r);

// Floor/ceil to BigInt.
BigInt floor_rational(const Rational& r);
BigInt ceil_rational(const Rational& r);

// C(n, k) as an exact big integer; 0 when k < 0 or k > n.
BigInt binomial(const BigInt& n, const BigInt& k);

// base^exp for exp >= 0.
Rational pow_rational(const Rational& base, unsigned long exp);

}  // namespace tanner
