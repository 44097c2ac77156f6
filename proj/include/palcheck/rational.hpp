#pragma once

// Exact rational arithmetic for every certified quantity. Densities,
// thresholds and inequality checks are compared exactly; floating point
// never enters a verdict (it appears only in informational report notes).

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace palcheck {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// base^exp for exp >= 0.
BigInt ipow(const BigInt& base, unsigned exp);

// Exact binomial coefficient; 0 when r < 0 or r > n.
BigInt binomial(int n, int r);

// Parses "num/den" or a bare integer ("3", "-1/2", "0"). Throws InputError
// on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "num/den" rendering: lowest terms, positive denominator,
// e.g. "1/2", "-3/4", "0/1". Reports always use this form.
std::string rational_str(const Rational& q);

}  // namespace palcheck
