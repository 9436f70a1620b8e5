#include "multiquad/radicand.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>
#include <sstream>

#include "multiquad/errors.hpp"

namespace multiquad {

namespace {

Int mod4(Int x) { return ((x % 4) + 4) % 4; }

// Closure of `entries` under sf-products, including 1.
std::vector<Int> span_with_one(std::span<const Int> entries) {
  std::vector<Int> span{1};
  for (Int g : entries) {
    if (std::find(span.begin(), span.end(), g) != span.end()) continue;
    const std::size_t old = span.size();
    for (std::size_t i = 0; i < old; ++i) span.push_back(squarefree_product(span[i], g));
  }
  return span;
}

std::string join(std::span<const Int> xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

void require_primitive(const RadicandList& list, const char* op) {
  if (!is_primitive(list)) throw DomainError(std::string(op) + ": radicand list {" + list.to_string() + "} is not primitive");
}

void require_prime(Int p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

// Subspaces of F_2^n are stored as 2^n-bit sets over the vectors (n <= 6).
using Subspace = std::uint64_t;

Subspace extend(Subspace s, unsigned v, unsigned n) {
  Subspace out = s;
  for (unsigned x = 0; x < (1u << n); ++x) {
    if (s >> x & 1) out |= Subspace{1} << (x ^ v);
  }
  return out;
}

}  // namespace

bool canonical_less(Int a, Int b) {
  const Int aa = a < 0 ? -a : a;
  const Int bb = b < 0 ? -b : b;
  if (aa != bb) return aa < bb;
  return a < b;
}

RadicandList::RadicandList(std::vector<Int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("empty radicand list");
  for (Int a : entries_) {
    if (a == 0 || a == 1) throw DomainError("radicand " + std::to_string(a) + " is not allowed (0 and 1 are excluded)");
    if (!is_squarefree(a)) throw DomainError("radicand " + std::to_string(a) + " is not squarefree");
  }
  const auto span = span_with_one(entries_);
  if (span.size() > (std::size_t{1} << kMaxDegreeExponent)) {
    throw DomainError("fields of degree above 2^" + std::to_string(kMaxDegreeExponent) + " are not supported");
  }
}

RadicandList RadicandList::parse(std::string_view text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '{')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '}')) tok.remove_suffix(1);
    if (tok.starts_with('+')) tok.remove_prefix(1);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw DomainError("cannot parse radicand list \"" + std::string(text) + "\"");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return RadicandList(std::move(out));
}

bool RadicandList::is_imaginary() const noexcept {
  return std::any_of(entries_.begin(), entries_.end(), [](Int a) { return a < 0; });
}

std::string RadicandList::to_string() const { return join(entries_, ','); }

FieldId::FieldId(std::vector<Int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), canonical_less);
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!std::has_single_bit(members_.size() + 1)) throw DomainError("field id must have 2^n - 1 members");
}

std::size_t FieldId::degree_exponent() const noexcept {
  return static_cast<std::size_t>(std::countr_zero(members_.size() + 1));
}

bool FieldId::contains(Int member) const {
  return member == 1 || std::binary_search(members_.begin(), members_.end(), member, canonical_less);
}

bool FieldId::contains(const FieldId& sub) const {
  return std::all_of(sub.members_.begin(), sub.members_.end(), [&](Int m) { return contains(m); });
}

bool FieldId::is_imaginary() const noexcept {
  return std::any_of(members_.begin(), members_.end(), [](Int a) { return a < 0; });
}

std::string FieldId::to_string() const { return join(members_, ','); }
std::string FieldId::file_stem() const { return join(members_, '_'); }

std::strong_ordering operator<=>(const FieldId& a, const FieldId& b) {
  if (a.members_.size() != b.members_.size()) return a.members_.size() <=> b.members_.size();
  for (std::size_t i = 0; i < a.members_.size(); ++i) {
    if (a.members_[i] == b.members_[i]) continue;
    return canonical_less(a.members_[i], b.members_[i]) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool is_primitive(const RadicandList& list) {
  // Primitive iff the 2^m subset products are pairwise distinct.
  return span_with_one(list.entries()).size() == (std::size_t{1} << list.size());
}

bool is_p_headed(const RadicandList& list, Int p) {
  for (std::size_t i = 1; i < list.size(); ++i) {
    if (list[i] % p == 0) return false;
  }
  return true;
}

bool is_standard_form(const RadicandList& list) {
  if (!is_primitive(list) || !is_p_headed(list, 2)) return false;
  std::optional<Int> residue;
  for (Int a : list) {
    if (a % 2 == 0) continue;
    if (residue && *residue != mod4(a)) return false;
    residue = mod4(a);
  }
  return true;
}

RadicandList primitive_part(const RadicandList& list) {
  std::vector<Int> span{1};
  std::vector<Int> kept;
  for (Int g : list) {
    if (std::find(span.begin(), span.end(), g) != span.end()) continue;
    kept.push_back(g);
    const std::size_t old = span.size();
    for (std::size_t i = 0; i < old; ++i) span.push_back(squarefree_product(span[i], g));
  }
  return RadicandList(std::move(kept));
}

RadicandList to_p_headed(const RadicandList& list, Int p) {
  require_primitive(list, "to_p_headed");
  require_prime(p);
  std::vector<Int> a(list.begin(), list.end());
  std::optional<std::size_t> head;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] % p != 0) continue;
    if (!head || std::abs(a[i]) < std::abs(a[*head])) head = i;
  }
  if (!head) return list;
  std::swap(a[0], a[*head]);
  for (std::size_t j = 1; j < a.size(); ++j) {
    if (a[j] % p == 0) a[j] = squarefree_product(a[0], a[j]);
  }
  return RadicandList(std::move(a));
}

RadicandList to_standard_form(const RadicandList& list) {
  RadicandList headed = to_p_headed(list, 2);
  if (is_standard_form(headed)) return headed;
  std::vector<Int> a(headed.begin(), headed.end());
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mod4(a[i]) != 3) continue;
    if (!pivot || std::abs(a[i]) < std::abs(a[*pivot])) pivot = i;
  }
  // Not standard means both residues 1 and 3 occur among odd entries.
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (mod4(a[j]) == 1) a[j] = squarefree_product(a[*pivot], a[j]);
  }
  RadicandList out(std::move(a));
  if (!is_standard_form(out)) throw InconsistencyError("standard form construction failed for {" + list.to_string() + "}");
  return out;
}

RadicandList to_negative_form(const RadicandList& list) {
  require_primitive(list, "to_negative_form");
  auto first_negative = std::find_if(list.begin(), list.end(), [](Int a) { return a < 0; });
  if (first_negative == list.end()) throw DomainError("to_negative_form: {" + list.to_string() + "} is totally real");
  std::vector<Int> a;
  for (Int x : list) a.push_back(x < 0 ? x : squarefree_product(*first_negative, x));
  return RadicandList(std::move(a));
}

CompleteList complete_list(const RadicandList& list) {
  auto span = span_with_one(list.entries());
  span.erase(span.begin());
  std::sort(span.begin(), span.end(), canonical_less);
  const auto n = static_cast<std::size_t>(std::countr_zero(span.size() + 1));
  return CompleteList{std::move(span), n};
}

FieldId field_id(const RadicandList& list) { return FieldId(complete_list(list).members); }

bool fields_equal(const RadicandList& a, const RadicandList& b) { return field_id(a) == field_id(b); }

RadicandList canonical_generators(const FieldId& id) {
  std::vector<Int> span{1};
  std::vector<Int> gens;
  for (Int m : id.members()) {
    if (std::find(span.begin(), span.end(), m) != span.end()) continue;
    gens.push_back(m);
    const std::size_t old = span.size();
    for (std::size_t i = 0; i < old; ++i) span.push_back(squarefree_product(span[i], m));
  }
  return RadicandList(std::move(gens));
}

SubfieldCounts sign_partition(const RadicandList& list) {
  SubfieldCounts c;
  for (Int m : complete_list(list).members) (m < 0 ? c.imaginary : c.real)++;
  return c;
}

SubfieldCounts subfield_counts(const RadicandList& list) {
  if (!list.is_imaginary()) throw DomainError("subfield_counts: {" + list.to_string() + "} is totally real");
  const std::size_t n = complete_list(list).n;
  if (n < 2) throw DomainError("subfield_counts needs n > 1");
  const SubfieldCounts expected{std::size_t{1} << (n - 1), (std::size_t{1} << (n - 1)) - 1};
  if (sign_partition(list) != expected) throw InconsistencyError("sign partition mismatch for {" + list.to_string() + "}");
  return expected;
}

std::uint64_t subspace_count(std::size_t n, std::size_t m) {
  if (m > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::size_t i = 0; i < m; ++i) {
    num *= (std::uint64_t{1} << (n - i)) - 1;
    den *= (std::uint64_t{1} << (m - i)) - 1;
  }
  return num / den;
}

std::vector<RadicandList> enumerate_subfields(const RadicandList& list, std::size_t m) {
  const RadicandList gens = canonical_generators(field_id(list));
  const auto n = static_cast<unsigned>(gens.size());
  if (m < 1 || m > n) throw DomainError("enumerate_subfields: need 1 <= m <= n");
  std::vector<Int> member(1u << n, 1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    const unsigned low = static_cast<unsigned>(std::countr_zero(mask));
    member[mask] = squarefree_product(member[mask & (mask - 1)], gens[low]);
  }
  std::set<Subspace> layer{Subspace{1}};
  for (std::size_t dim = 0; dim < m; ++dim) {
    std::set<Subspace> next;
    for (Subspace s : layer) {
      for (unsigned v = 1; v < (1u << n); ++v) {
        if (!(s >> v & 1)) next.insert(extend(s, v, n));
      }
    }
    layer = std::move(next);
  }
  std::vector<FieldId> ids;
  for (Subspace s : layer) {
    std::vector<Int> ms;
    for (unsigned x = 1; x < (1u << n); ++x) {
      if (s >> x & 1) ms.push_back(member[x]);
    }
    ids.emplace_back(std::move(ms));
  }
  std::sort(ids.begin(), ids.end());
  std::vector<RadicandList> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(canonical_generators(id));
  return out;
}

}  // namespace multiquad
