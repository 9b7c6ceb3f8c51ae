#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace eulerian {

// All triangle entries are exact integers and all identity checks run over
// exact rationals; no floating point is used anywhere in the library.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Row = std::vector<BigInt>;

BigInt factorial(int n);

// C(n, k) for integer arguments; zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

BigInt pow_bigint(const BigInt& base, unsigned exp);
Rational pow_rational(const Rational& base, int exp);

// Generalized binomial C(x, n) = x(x-1)...(x-n+1)/n! for rational x.
Rational rational_binomial(const Rational& x, int n);

// Parses "p/q" or an integer literal. Decimal points are rejected;
// "XeN"/"Xe-N" scientific literals with integer mantissa are accepted
// (used for tolerances, e.g. "1e-9" -> 1/10^9).
Rational parse_rational(const std::string& text);

std::string to_decimal(const BigInt& v);
std::string to_string(const Rational& v);

// Smallest integer e with |v| <= 10^e, as a compact printable magnitude
// bound; returns "0" for v == 0.
std::string decimal_magnitude(const Rational& v);

}  // namespace eulerian
