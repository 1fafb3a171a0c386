// Tiny integer helpers used throughout: trial-division factoring for the
// desk-scale orders handled here (n <= a few thousand).
#pragma once

#include <vector>

namespace submod {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ascending list of distinct prime divisors
inline std::vector<int> prime_divisors(int n) {
  std::vector<int> ps;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// largest power of p dividing n
inline int p_part(int n, int p) {
  int q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

// n == r^a with r prime, a >= 1?  returns r, or 0 if not a prime power
inline int prime_power_base(int n) {
  if (n < 2) return 0;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      return n == 1 ? d : 0;
    }
  return n;  // n itself prime
}

// product of exactly two primes (p*q, possibly p == q)?
inline bool is_semiprime(int n) {
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return is_prime(n / d);
  return false;
}

inline bool square_free(int n) {
  for (int d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

}  // namespace submod
