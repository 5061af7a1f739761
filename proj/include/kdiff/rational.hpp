#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace kdiff {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Serializes as "p/q" with q > 0, always including the denominator.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// Accepts "p/q" or a bare integer "p". Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

/// 2^e for any integer e (negative exponents give fractions).
Rational pow2(int e);

BigInt ipow(const BigInt& base, unsigned exponent);

inline BigInt pow4(int e) { return ipow(BigInt(4), static_cast<unsigned>(e)); }

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

}  // namespace kdiff
