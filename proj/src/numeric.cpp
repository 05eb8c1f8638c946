#include "ramcover/numeric.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace ramcover {

Count gcd(Count a, Count b) { return std::gcd(a, b); }
Count lcm(Count a, Count b) { return std::lcm(a, b); }

Count binomial(Count n, Count k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (Count i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<Count>::max()) throw std::overflow_error("binomial overflow");
  }
  return static_cast<Count>(r);
}

Count falling(Count n, Count k) {
  if (k < 0 || k > n) return 0;
  __int128 r = 1;
  for (Count i = 0; i < k; ++i) {
    r *= (n - i);
    if (r > std::numeric_limits<Count>::max()) throw std::overflow_error("falling factorial overflow");
  }
  return static_cast<Count>(r);
}

BigInt factorial(Count n) {
  BigInt r = 1;
  for (Count i = 2; i <= n; ++i) r *= i;
  return r;
}

bool is_prime(Count n) {
  if (n < 2) return false;
  for (Count d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Count euler_phi(Count n) {
  Count r = n;
  for (Count p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

int v2(Count n) {
  if (n == 0) return 64;
  int v = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  return v;
}

}  // namespace ramcover
