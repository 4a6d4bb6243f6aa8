#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <vector>

namespace motivic {

// All symbolic coefficients are exact.  cpp_int/cpp_rational keep the engine
// free of overflow without linking an external bignum library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer int_pow(Integer base, unsigned long e) {
  Integer r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline long gcd_positive(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return std::gcd(a, b);
}

inline Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace motivic
