#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclekit {

// Exact arithmetic carriers for the whole library. Rationals are kept in
// lowest terms with positive denominator by the backend.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRational& q) {
  return boost::multiprecision::numerator(q);
}

inline BigInt denominator(const BigRational& q) {
  return boost::multiprecision::denominator(q);
}

inline BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// C(n, k); zero outside the triangle so callers can sum without guards.
inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

inline BigRational inv_binomial(int n, int k) {
  BigInt b = binomial(n, k);
  if (b == 0) throw std::invalid_argument("inv_binomial: zero binomial");
  return BigRational(1, b);
}

inline BigInt pow2(int e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  return BigInt(1) << e;
}

// Rounds num/den to double without overflowing on huge operands: the quotient
// is first scaled to an ~80-bit integer mantissa, then ldexp'd back.
inline double to_double(const BigRational& q) {
  BigInt num = numerator(q);
  if (num == 0) return 0.0;
  BigInt den = denominator(q);
  const bool neg = num < 0;
  if (neg) num = -num;
  const long nb = static_cast<long>(boost::multiprecision::msb(num));
  const long db = static_cast<long>(boost::multiprecision::msb(den));
  const long shift = 80 - (nb - db);
  BigInt scaled = shift >= 0 ? BigInt((num << shift) / den)
                             : BigInt(num / (den << (-shift)));
  const double d = std::ldexp(scaled.convert_to<double>(),
                              static_cast<int>(-shift));
  return neg ? -d : d;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string num_string(const BigRational& q) {
  return numerator(q).str();
}

inline std::string den_string(const BigRational& q) {
  return denominator(q).str();
}

// Parses a nonnegative big integer written in decimal.
inline BigInt bigint_from_decimal(const std::string& s) { return BigInt(s); }

}  // namespace cyclekit
