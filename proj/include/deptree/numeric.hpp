#pragma once

// Exact arithmetic used throughout the library: unbounded integers for
// counts of combinatorial objects and rationals for ratio-valued metrics.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace deptree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return Rational(num, den);
}

/// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string to_exact_string(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Fixed-point rendering with `digits` fraction digits, rounded half away
/// from zero using exact arithmetic (no detour through binary floating point).
inline std::string to_decimal_string(const Rational& r, unsigned digits = 6) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  const bool negative = num < 0;
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const BigInt abs_num = negative ? BigInt(-num) : num;
  const BigInt scaled = (abs_num * scale * 2 + den) / (den * 2);

  std::string int_part = BigInt(scaled / scale).str();
  std::string frac = BigInt(scaled % scale).str();
  if (frac.size() < digits) frac.insert(0, digits - frac.size(), '0');

  std::string out;
  if (negative && scaled != 0) out += '-';
  out += int_part;
  if (digits > 0) {
    out += '.';
    out += frac;
  }
  return out;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline BigInt factorial(std::uint64_t n) {
  BigInt f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt power(std::uint64_t base, std::uint64_t exponent) {
  BigInt p = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) p *= base;
  return p;
}

}  // namespace deptree
