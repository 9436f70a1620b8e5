#pragma once

// Kuroda's class number formula for V4 extensions K/k,
//   h_K = 2^(d - kappa - 2 - nu) q(K/k) h_1 h_2 h_3 / h_k^2,
// and its iterated form for imaginary multiquadratic fields,
//   h_K = (1/2)^(2^(n-1) - 1) Q P h_3.

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "multiquad/ramification.hpp"
#include "multiquad/units.hpp"

namespace multiquad {

struct KurodaDecomposition {
  FieldId K;
  FieldId k;
  /// Intermediate fields; imaginary ones first (ordered by FieldId), then real.
  FieldId k1, k2, k3;
  /// Infinite places of k ramified in K.
  int d = 0;
  /// Unit rank of k.
  int kappa = 0;
  int nu = 0;
};

/// The three fields strictly between k and K, ordered as in KurodaDecomposition.
std::array<FieldId, 3> intermediate_fields(const FieldId& K, const FieldId& k);
/// Fills K, k, k1..k3, d and kappa; nu is left 0.
KurodaDecomposition decompose(const FieldId& K, const FieldId& k);

struct ClassNumberResult {
  FieldId field;
  Int h = 0;
  std::string formula;
  /// Named inputs in evaluation order, e.g. ("q(K/k)", "2").
  std::vector<std::pair<std::string, std::string>> inputs;
  /// Expressions of the subfield unit generators in the unit system of K.
  std::vector<std::string> unit_witnesses;
  std::vector<std::string> datasets;
  /// Results for the subfields the formula consumed.
  std::vector<ClassNumberResult> parts;

  const std::string* input(const std::string& name) const;
};

/// Throws InconsistencyError (listing every input) when the value is not a positive integer.
ClassNumberResult kuroda_general(const KurodaDecomposition& dec, Int h1, Int h2, Int h3, Int hk, const mpz_class& q);
/// Imaginary K over a real (n-2)-quadratic k with nu = 0: h = q h1 h2 h3 / (2 hk^2).
ClassNumberResult small_kuroda(const KurodaDecomposition& dec, Int h1, Int h2, Int h3, Int hk, const mpz_class& q);

/// Product of the class numbers of the imaginary quadratic subfields.
Int P_product(const FieldId& K);

/// Elimination bound for class number 1: (1/2)^(2^(n-1)-1) times the product over
/// imaginary quadratic subfields of h when h is 1, 2 or 4 and 8 otherwise. If h_K = 1
/// every such h must be a power of 2, so a bound above 1 rules the field out.
/// Without `known` every class number is computed; with it, radicands missing
/// from the map count as 8 (the map is taken to hold every h in {1, 2, 4}).
mpq_class h_lower_bound(const FieldId& K, const std::map<Int, Int>* known = nullptr);

/// Class numbers of multiquadratic fields through Kuroda's formula, with unit
/// systems drawn from a provider. Results are memoized per field.
class ClassNumberEngine {
 public:
  explicit ClassNumberEngine(UnitProvider& units) : units_(units) {}

  /// Any field: quadratic directly, imaginary through big_kuroda, real through
  /// the general formula over its first (n-2)-quadratic subfield.
  ClassNumberResult class_number(const FieldId& K);
  /// Imaginary K, n >= 2. `base` overrides choose_base_subfield for n >= 3.
  ClassNumberResult big_kuroda(const FieldId& K, std::optional<BaseChoice> base = std::nullopt);

  /// q(K/k) = [E(K) : E(k1)E(k2)E(k3)].
  IndexResult relative_unit_index(const FieldId& K, const FieldId& k);
  /// 0 when an odd prime ramifies in K but not in k, otherwise decided by
  /// testing which unit classes of k become squares in K.
  int nu(const FieldId& K, const FieldId& k);

  UnitProvider& units() { return units_; }

 private:
  ClassNumberResult real_class_number(const FieldId& K);

  UnitProvider& units_;
  std::mutex mu_;
  std::map<FieldId, ClassNumberResult> memo_;
};

}  // namespace multiquad
