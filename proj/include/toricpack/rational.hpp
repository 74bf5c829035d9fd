#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace toricpack {

// All scalar arithmetic in the library is exact. Rationals are kept in
// lowest terms with a positive denominator (the backend canonicalizes on
// every operation); there is no floating-point fallback anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return numerator(r); }
inline Int rat_den(const Rational& r) { return denominator(r); }

/// Serializes as "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Int& n);

/// Parses "p", "p/q" or "-p/q". Throws Error("ParseError") on anything else.
Rational parse_rational(const std::string& text);

/// Largest integer <= r.
Int rational_floor(const Rational& r);
/// Smallest integer >= r.
Int rational_ceil(const Rational& r);

Rational rational_abs(const Rational& r);
Int int_abs(const Int& n);

/// r^k for k >= 0.
Rational rational_pow(const Rational& r, unsigned k);

Int factorial(unsigned n);

} // namespace toricpack
