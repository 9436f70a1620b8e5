#pragma once

// Independent reference computations used by the tests. Deliberately naive.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Int = std::int64_t;

inline Int sf(Int x) {
  Int sign = x < 0 ? -1 : 1;
  Int a = x < 0 ? -x : x;
  Int out = 1;
  for (Int p = 2; p * p <= a; ++p) {
    int e = 0;
    while (a % p == 0) {
      a /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return sign * out * a;
}

/// Every sf-product of a nonempty subset, excluding 1, sorted.
inline std::vector<Int> complete_list(const std::vector<Int>& gens) {
  std::set<Int> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << gens.size()); ++mask) {
    Int p = 1;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (mask >> i & 1) p = sf(p * gens[i]);
    if (p != 1) out.insert(p);
  }
  return {out.begin(), out.end()};
}

inline Int quad_disc(Int a) {
  Int r = ((a % 4) + 4) % 4;
  return r == 1 ? a : 4 * a;
}

/// |disc K| as the product of the conductors of the quadratic characters.
inline mpz_class conductor_discriminant(const std::vector<Int>& gens) {
  mpz_class d = 1;
  for (Int m : complete_list(gens)) d *= static_cast<long>(std::abs(quad_disc(m)));
  return d;
}

/// h(D) for D < 0 by counting reduced forms (|b| <= a <= c, b >= 0 if either equality).
inline Int class_number_negative(Int D) {
  Int h = 0;
  for (Int a = 1; 3 * a * a <= -D; ++a) {
    for (Int b = -a + 1; b <= a; ++b) {
      Int num = b * b - D;
      if (num % (4 * a)) continue;
      Int c = num / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++h;
    }
  }
  return h;
}

inline bool is_square(Int n) {
  if (n < 0) return false;
  Int r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

inline bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// Smallest y <= limit with x^2 - a y^2 = +-w^2 solvable (w = 2 allowed when a = 1 mod 4), or 0.
inline Int smallest_pell_y(Int a, Int limit) {
  Int w = (a % 4 == 1) ? 2 : 1;
  for (Int y = 1; y <= limit; ++y) {
    Int t = a * y * y;
    if (is_square(t + w * w) || is_square(t - w * w)) return y;
  }
  return 0;
}

}  // namespace oracle
