#pragma once

// Quadratic fields Q(sqrt a): class numbers by form reduction, fundamental
// units by continued fractions, and an analytic cross-check.

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "multiquad/arith.hpp"

namespace multiquad {

/// Field discriminant: a if a = 1 mod 4, else 4a. Throws DomainError for bad a.
Int quad_discriminant(Int a);

/// Binary quadratic form A x^2 + B xy + C y^2.
struct BQF {
  Int A = 0, B = 0, C = 0;
  Int discriminant() const { return B * B - 4 * A * C; }
  friend bool operator==(const BQF&, const BQF&) = default;
  friend auto operator<=>(const BQF&, const BQF&) = default;
};

/// Reduced positive definite forms of discriminant D < 0.
std::vector<BQF> reduced_definite_forms(Int D);
/// Reduced indefinite forms of discriminant D > 0 (D not a square).
std::vector<BQF> reduced_indefinite_forms(Int D);
/// One reduction step on the cycle of reduced indefinite forms.
BQF rho(const BQF& f, Int D);

/// (x + y sqrt a) / w.
struct QuadUnit {
  mpz_class x, y;
  int w = 1;
  Int a = 0;

  /// (x^2 - a y^2) / w^2.
  int norm() const;
  /// "x+y*sqrt(a)" or "(x+y*sqrt(a))/2".
  std::string to_string() const;
  friend bool operator==(const QuadUnit&, const QuadUnit&) = default;
};

/// h(a) for squarefree a not in {0, 1}. Memoized and thread-safe.
Int class_number(Int a);
/// Narrow class number of a real field (number of reduced-form cycles).
Int narrow_class_number(Int a);

/// Fundamental unit (> 1) of Q(sqrt a), a > 1 squarefree.
QuadUnit fundamental_unit(Int a);

struct AnalyticClassNumber {
  double value = 0;         ///< approximation of h
  Int rounded = 0;          ///< nearest integer
  double margin = 0;        ///< 0.5 - |value - rounded| - error bound
  long precision_bits = 0;  ///< working precision used (0 when exact)
};

/// Dirichlet class number formula. Exact for a < 0; for a > 1 evaluated with
/// MPFR starting at `digits` decimal digits and doubling until the margin is
/// at least 0.4. Throws PrecisionError past 4096 bits.
AnalyticClassNumber class_number_analytic_check(Int a, int digits = 64);

/// Legendre symbol (u/p) for an odd prime p. Throws DomainError otherwise.
int legendre(Int u, Int p);

/// Mouhib's criterion for the 2-class group of Q(sqrt p1, ..., sqrt p4) to be
/// trivial, tried over all orderings. Throws DomainError on repeated or non-prime input.
bool mouhib_trivial_2class(Int p1, Int p2, Int p3, Int p4);

/// Squarefree 0 < a <= bound with h(-a) = h, ascending. Sharded over `jobs` threads.
std::vector<Int> fields_with_class_number(Int h, Int bound, unsigned jobs = 1);

/// Write-through JSON cache {"-163": 1, ...} for class_number. An empty path detaches.
void attach_class_number_cache(const std::filesystem::path& path);

}  // namespace multiquad
