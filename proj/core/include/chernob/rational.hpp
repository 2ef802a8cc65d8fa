#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace chernob {

// Exact rational arithmetic with arbitrary-precision integer parts.
// cpp_rational keeps the canonical form we rely on everywhere: positive
// denominator, gcd(|num|, den) = 1, zero stored as 0/1.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline std::string to_string(const Rational& q) { return q.str(); }

// Correctly rounded for the coefficient sizes this project produces
// (|num|, den < 2^53); falls back to long double division otherwise.
inline double to_double(const Rational& q) {
  const BigInt n = num(q);
  const BigInt d = den(q);
  if (abs(n) < (BigInt(1) << 53) && d < (BigInt(1) << 53)) {
    return static_cast<double>(n.convert_to<std::int64_t>()) /
           static_cast<double>(d.convert_to<std::int64_t>());
  }
  return static_cast<double>(n.convert_to<long double>() / d.convert_to<long double>());
}

inline std::complex<double> to_complex(const Rational& q) { return {to_double(q), 0.0}; }

}  // namespace chernob
