#pragma once

// Exact arithmetic in a multiquadratic field K = Q(sqrt g_1, ..., sqrt g_n).
//
// Elements are stored over the basis {sqrt m_S}, where S runs over subsets of
// the canonical generators (as bit masks) and m_S = sf(prod_{i in S} g_i);
// S = 0 is the rational part.  Products follow sqrt m_S * sqrt m_T = c * sqrt m_{S^T}.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "multiquad/interval.hpp"
#include "multiquad/radicand.hpp"

namespace multiquad {

class MultiquadField {
 public:
  using Ptr = std::shared_ptr<const MultiquadField>;

  /// Shared context per field (cached).
  static Ptr get(const FieldId& id);
  static Ptr get(const RadicandList& list) { return get(field_id(list)); }

  const FieldId& id() const { return id_; }
  const RadicandList& generators() const { return gens_; }
  std::size_t n() const { return gens_.size(); }
  std::size_t degree() const { return std::size_t{1} << gens_.size(); }
  bool is_imaginary() const { return id_.is_imaginary(); }

  /// m_S; member(0) == 1.
  Int member(unsigned mask) const { return members_[mask]; }
  /// Mask of a complete-list member (or 1 -> 0). Throws DomainError if absent.
  unsigned mask_of(Int m) const;
  /// sqrt m_S * sqrt m_T = coefficient(S, T) * sqrt m_{S^T}.
  Int coefficient(unsigned s, unsigned t) const { return coeff_[(s << n()) | t]; }
  /// Automorphism index of complex conjugation.
  unsigned conjugation() const { return conj_; }
  /// Masks of the basis elements spanning the given subfield.
  std::vector<unsigned> subfield_masks(const FieldId& sub) const;
  /// Automorphisms (as indices v) fixing the given subfield pointwise.
  std::vector<unsigned> fixing_group(const FieldId& sub) const;

 private:
  explicit MultiquadField(const FieldId& id);

  FieldId id_;
  RadicandList gens_;
  std::vector<Int> members_;
  std::unordered_map<Int, unsigned> mask_of_;
  std::vector<Int> coeff_;
  unsigned conj_ = 0;
};

class MQElement {
 public:
  MQElement() = default;
  /// Zero of the field.
  explicit MQElement(MultiquadField::Ptr field);
  MQElement(MultiquadField::Ptr field, const mpq_class& rational);

  /// sqrt(m) for a complete-list member m (or 1).
  static MQElement sqrt_member(MultiquadField::Ptr field, Int m);
  /// Coordinates keyed by member radicand (1 for the rational part).
  static MQElement from_coords(MultiquadField::Ptr field, const std::vector<std::pair<Int, mpq_class>>& coords);
  /// Parses "1/2*sqrt(3) - 1/2*sqrt(-1) + 1/2"; every radicand must be a member.
  static MQElement parse(MultiquadField::Ptr field, const std::string& text);

  const MultiquadField::Ptr& field() const { return field_; }
  const std::vector<mpq_class>& coords() const { return c_; }
  const mpq_class& coord(unsigned mask) const { return c_[mask]; }
  mpq_class& coord(unsigned mask) { return c_[mask]; }
  /// Coefficient of sqrt(m).
  const mpq_class& coefficient_of(Int m) const;

  bool is_zero() const;
  bool is_rational() const;
  bool operator==(const MQElement& o) const;

  MQElement operator+(const MQElement& o) const;
  MQElement operator-(const MQElement& o) const;
  MQElement operator-() const;
  MQElement operator*(const MQElement& o) const;
  MQElement operator*(const mpq_class& q) const;
  /// Throws DomainError on division by zero.
  MQElement inverse() const;
  MQElement operator/(const MQElement& o) const { return *this * o.inverse(); }
  /// Integer power (negative exponents invert).
  MQElement pow(long e) const;

  /// sigma_v: sqrt m_S -> (-1)^{|v & S|} sqrt m_S.
  MQElement galois(unsigned v) const;
  MQElement conjugate() const { return galois(field_->conjugation()); }
  /// Absolute norm to Q.
  mpq_class norm() const;
  /// Product of the conjugates over the subfield (an element of this field supported on the subfield).
  MQElement relative_norm(const FieldId& sub) const;
  /// True iff all conjugates are algebraic integers.
  bool is_integral() const;
  /// y with y^2 == x, exactly verified, or none.
  std::optional<MQElement> sqrt() const;
  /// Same element viewed in a larger field containing this one.
  MQElement lift(MultiquadField::Ptr super) const;
  /// Restriction to a subfield; throws DomainError if a coordinate outside it is nonzero.
  MQElement restrict_to(MultiquadField::Ptr sub) const;

  /// Enclosures of sigma_v(x) for every v, with the principal square-root branch.
  std::vector<EmbeddingValue> embeddings(long bits) const;

  /// "1/2*sqrt(3) - 1/2*sqrt(-1) + 1/2" in canonical member order, rational part last.
  std::string to_string() const;

 private:
  MultiquadField::Ptr field_;
  std::vector<mpq_class> c_;
};

/// Roots of unity of a field.
struct TorsionGroup {
  int order = 2;
  MQElement generator;
};

/// Largest m in {2,4,6,8,12,24} with Q(zeta_m) inside the field, with an explicit generator.
TorsionGroup torsion_units(MultiquadField::Ptr field);

/// Multiplicative order of x if it is a root of unity of order dividing 24, else 0.
int root_of_unity_order(const MQElement& x);

}  // namespace multiquad
