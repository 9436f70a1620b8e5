#pragma once

// Discriminants, ramified primes and inertia fields of multiquadratic fields,
// plus the parity gate and the choice of a real base field for Kuroda's formula.

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "multiquad/radicand.hpp"

namespace multiquad {

/// |Delta_K| = (2^e p_1 ... p_s)^(2^(n-1)).
struct DiscriminantData {
  int e = 0;
  std::vector<Int> odd_primes;
  mpz_class delta;
};

/// Requires a list in standard form (see to_standard_form); throws DomainError otherwise.
DiscriminantData multiquad_discriminant(const RadicandList& standard_form);
/// Normalizes an arbitrary radicand list first.
DiscriminantData discriminant_of(const RadicandList& list);

/// Primes dividing the discriminant, ascending.
std::vector<Int> ramified_primes(const RadicandList& list);
std::vector<Int> ramified_primes(const FieldId& field);

struct InertiaData {
  Int p = 0;
  int ram_index = 1;
  /// Generators of the inertia field; empty means Q.
  std::vector<Int> generators;
  FieldId field;
};

InertiaData inertia_field(const RadicandList& list, Int p);

/// At least n ramified primes (real) or n - 1 (imaginary).
bool min_ramified_ok(const RadicandList& list);
/// True when the class number is provably even: a real field with at least 5
/// ramified primes, or an imaginary field whose maximal real subfield is one.
/// False carries no parity information.
bool frolich_even_gate(const RadicandList& list);

/// The real subfield of index 2 of an imaginary field (Q for n == 1).
FieldId maximal_real_subfield(const FieldId& field);

struct BaseChoice {
  FieldId k;
  Int p = 0;
};

/// Real (n-2)-quadratic k inside imaginary K together with an odd prime that
/// ramifies in K but not in k. Known table choices take precedence; otherwise
/// the smallest odd ramified prime and the first suitable subfield by FieldId.
BaseChoice choose_base_subfield(const RadicandList& list);
/// Every valid choice for K, ordered by (k, p); p is the smallest admissible prime.
std::vector<BaseChoice> all_base_choices(const RadicandList& list);
bool is_valid_base_choice(const FieldId& K, const BaseChoice& choice);

}  // namespace multiquad
