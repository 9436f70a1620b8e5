#pragma once

// Integer helpers shared by every module: squarefree parts, primality,
// Kronecker symbols and exact square roots.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace multiquad {

using Int = std::int64_t;

/// Squarefree part with sign: x / (largest square dividing x). Throws DomainError on 0.
Int squarefree_part(Int x);
bool is_squarefree(Int x);

/// sf(a*b) for squarefree a, b without forming the full product.
Int squarefree_product(Int a, Int b);

bool is_prime(Int n);
/// Distinct prime divisors of |n|, ascending.
std::vector<Int> prime_divisors(Int n);

Int isqrt(Int n);
bool is_perfect_square(Int n);
Int gcd(Int a, Int b);

/// Kronecker symbol (a/n) for n >= 1.
int kronecker(Int a, Int n);

/// Exact rational square root, if any.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

/// Population count of a subset mask.
inline int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

}  // namespace multiquad
