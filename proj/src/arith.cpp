#include "multiquad/arith.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "multiquad/errors.hpp"

namespace multiquad {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

u64 abs_u64(Int x) { return x < 0 ? u64(0) - static_cast<u64>(x) : static_cast<u64>(x); }

}  // namespace

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int isqrt(Int n) {
  if (n < 0) throw DomainError("isqrt of negative number");
  auto r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * static_cast<u128>(r) > static_cast<u128>(n)) --r;
  while (static_cast<u128>(r + 1) * static_cast<u128>(r + 1) <= static_cast<u128>(n)) ++r;
  return r;
}

bool is_perfect_square(Int n) {
  if (n < 0) return false;
  Int r = isqrt(n);
  return r * r == n;
}

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  const u64 m = static_cast<u64>(n);
  u64 d = m - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic below 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(m, a, d, s)) return false;
  }
  return true;
}

std::vector<Int> prime_divisors(Int n) {
  std::vector<Int> out;
  u64 m = abs_u64(n);
  for (u64 p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p == 0) {
      out.push_back(static_cast<Int>(p));
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) out.push_back(static_cast<Int>(m));
  return out;
}

Int squarefree_part(Int x) {
  if (x == 0) throw DomainError("squarefree part of 0 is undefined");
  if (x == std::numeric_limits<Int>::min()) throw DomainError("radicand out of range");
  u64 m = abs_u64(x);
  u64 result = 1;
  // Trial division up to the cube root of the remaining cofactor; what is left
  // then has at most two prime factors, so it is either a square or squarefree.
  for (u64 p = 2; p * p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e & 1) result *= p;
  }
  if (m > 1 && !is_perfect_square(static_cast<Int>(m))) result *= m;
  return x < 0 ? -static_cast<Int>(result) : static_cast<Int>(result);
}

bool is_squarefree(Int x) { return x != 0 && squarefree_part(x) == x; }

Int squarefree_product(Int a, Int b) {
  Int g = std::gcd(a, b);
  __int128 p = static_cast<__int128>(a / g) * static_cast<__int128>(b / g);
  if (p > std::numeric_limits<Int>::max() || p < -std::numeric_limits<Int>::max()) {
    throw DomainError("radicand product overflows 64 bits");
  }
  return static_cast<Int>(p);
}

int kronecker(Int a, Int n) {
  if (n <= 0) throw DomainError("kronecker symbol needs n >= 1");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    if (a % 2 == 0) return 0;
    Int r = ((a % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
  }
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      Int r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  return mpq_class(sqrt(num), sqrt(den));
}

}  // namespace multiquad
