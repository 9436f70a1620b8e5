#pragma once

// Radicand-list calculus for n-quadratic fields Q(sqrt a_1, ..., sqrt a_n).
//
// A field is handled through any list of squarefree radicands that generates
// it; FieldId (the sorted set of all quadratic-subfield radicands) is the
// canonical identity used for comparisons, caching and file names.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multiquad/arith.hpp"

namespace multiquad {

/// Public API cap on the degree exponent n (field degree 2^n).
inline constexpr std::size_t kMaxDegreeExponent = 6;

/// sf(x): signed squarefree part. Throws DomainError for x == 0.
inline Int sf(Int x) { return squarefree_part(x); }

/// Canonical member order: ascending |value|, negative before positive.
bool canonical_less(Int a, Int b);

/// Ordered list of squarefree radicands, each different from 0 and 1.
class RadicandList {
 public:
  RadicandList() = default;
  /// Throws DomainError on 0, 1, non-squarefree entries, an empty list or more
  /// than kMaxDegreeExponent independent entries.
  explicit RadicandList(std::vector<Int> entries);
  RadicandList(std::initializer_list<Int> entries) : RadicandList(std::vector<Int>(entries)) {}

  /// Parses "-1,2,3" (whitespace tolerated).
  static RadicandList parse(std::string_view text);

  std::span<const Int> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  Int operator[](std::size_t i) const { return entries_.at(i); }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  /// True iff some entry is negative.
  bool is_imaginary() const noexcept;
  /// "-1,2,3"
  std::string to_string() const;

  friend bool operator==(const RadicandList&, const RadicandList&) = default;

 private:
  std::vector<Int> entries_;
};

/// The 2^n - 1 radicands of all quadratic subfields, in canonical order.
struct CompleteList {
  std::vector<Int> members;
  std::size_t n = 0;
};

/// Field identity: the canonical complete list.
class FieldId {
 public:
  FieldId() = default;
  explicit FieldId(std::vector<Int> members);

  std::span<const Int> members() const noexcept { return members_; }
  std::size_t degree_exponent() const noexcept;
  std::size_t degree() const noexcept { return members_.size() + 1; }
  bool contains(Int member) const;
  bool contains(const FieldId& sub) const;
  bool is_imaginary() const noexcept;

  /// Sorted complete list, e.g. "-1,-2,2".
  std::string to_string() const;
  /// File-name form used for dataset paths, e.g. "-1_-2_2".
  std::string file_stem() const;

  friend bool operator==(const FieldId&, const FieldId&) = default;
  friend std::strong_ordering operator<=>(const FieldId& a, const FieldId& b);

 private:
  std::vector<Int> members_;
};

/// Primitive iff no entry is the sf-product of a subset of the others.
/// Throws DomainError on malformed entries.
bool is_primitive(const RadicandList& list);
bool is_p_headed(const RadicandList& list, Int p);
bool is_standard_form(const RadicandList& list);

/// Reduces any radicand list to a primitive one for the same field
/// (drops entries that are products of earlier ones).
RadicandList primitive_part(const RadicandList& list);

/// p-headed list for the same field: the p-divisible entry of least absolute
/// value moves to the front and the other p-divisible entries are multiplied by it.
RadicandList to_p_headed(const RadicandList& list, Int p);
/// 2-headed list whose odd entries are pairwise congruent mod 4.
RadicandList to_standard_form(const RadicandList& list);
/// All-negative list for an imaginary field. Throws DomainError for real input.
RadicandList to_negative_form(const RadicandList& list);

CompleteList complete_list(const RadicandList& list);
FieldId field_id(const RadicandList& list);
bool fields_equal(const RadicandList& a, const RadicandList& b);

/// Display generators: greedy choice of the smallest independent members.
RadicandList canonical_generators(const FieldId& id);

struct SubfieldCounts {
  std::size_t imaginary = 0;
  std::size_t real = 0;
  friend bool operator==(const SubfieldCounts&, const SubfieldCounts&) = default;
};

/// Sign partition of the complete list; valid for any field.
SubfieldCounts sign_partition(const RadicandList& list);
/// (2^{n-1}, 2^{n-1} - 1) for an imaginary field with n > 1, asserted
/// against the sign partition. Throws DomainError on real input or n == 1.
SubfieldCounts subfield_counts(const RadicandList& list);

/// All m-quadratic subfields as canonical generator lists, sorted by FieldId.
std::vector<RadicandList> enumerate_subfields(const RadicandList& list, std::size_t m);

/// Number of rank-m subspaces of F_2^n (Gaussian binomial at q = 2).
std::uint64_t subspace_count(std::size_t n, std::size_t m);

}  // namespace multiquad
