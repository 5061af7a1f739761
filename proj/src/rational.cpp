#include "kdiff/rational.hpp"

#include "kdiff/errors.hpp"

namespace kdiff {

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

std::string to_string(const BigInt& z) { return z.str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

BigInt parse_int(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational pow2(int e) {
  if (e >= 0) return Rational(ipow(BigInt(2), static_cast<unsigned>(e)));
  return Rational(BigInt(1), ipow(BigInt(2), static_cast<unsigned>(-e)));
}

BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace kdiff
