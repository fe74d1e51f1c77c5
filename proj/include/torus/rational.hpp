#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "torus/common.hpp"

namespace torus {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored in lowest terms with a
// positive denominator. Carrier for the exact exponent calculus: the strict
// inequalities asserted there must be decided without any tolerance.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  return Rational(num, den);
}

// 2^e for e possibly negative.
inline Rational pow2_rational(int e) {
  BigInt p = BigInt(1) << static_cast<unsigned>(e >= 0 ? e : -e);
  return e >= 0 ? Rational(p) : Rational(BigInt(1), p);
}

// Serialized as "p/q" ("p" when q == 1), never as a float.
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r);
}

// Parses "p/q", "p", or a plain decimal like "0.5" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace torus
