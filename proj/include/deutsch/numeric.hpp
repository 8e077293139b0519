// Exact number types shared by the series and closed-form modules.
#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace deutsch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integers print without a denominator, everything else as "p/q".
inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

inline std::string to_string(const BigInt& n) { return n.str(); }

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

/// Binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

}  // namespace deutsch
