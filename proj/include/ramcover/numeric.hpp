#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ramcover {

using Count = std::int64_t;
// Expression templates off: values behave like plain arithmetic types.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

inline std::string to_string(const BigInt& x) { return x.str(); }

// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& x) {
  const BigInt& den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

inline bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

Count gcd(Count a, Count b);
Count lcm(Count a, Count b);
// C(n,k) as a 64-bit value; throws std::overflow_error when it does not fit.
Count binomial(Count n, Count k);
// n!/(n-k)!; throws std::overflow_error when it does not fit.
Count falling(Count n, Count k);
BigInt factorial(Count n);
bool is_prime(Count n);
Count euler_phi(Count n);
// 2-adic valuation, v2(0) is treated as 64.
int v2(Count n);

}  // namespace ramcover
