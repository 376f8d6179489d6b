#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pezzo {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator; zero is canonically 0/1.  Backed by cpp_rational, which
/// maintains exactly that normal form.
using Rational = boost::multiprecision::cpp_rational;

/// Safe numerator/denominator construction.  The raw two-integer-literal
/// constructor of cpp_rational is a precision overload, not num/den, so
/// all call sites go through here.
inline Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  return Rational(num) / Rational(den);
}

inline Rational ratio(long long num, long long den = 1) {
  return ratio(BigInt(num), BigInt(den));
}

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string rat_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline int rat_sign(const Rational& r) { return r.sign(); }

}  // namespace pezzo
