#include "multiquad/ramification.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "multiquad/errors.hpp"

namespace multiquad {

namespace {

int mod4(Int a) { return static_cast<int>(((a % 4) + 4) % 4); }

// Choices printed alongside the triquadratic class number computations.
const std::map<FieldId, BaseChoice>& table_choices() {
  static const std::map<FieldId, BaseChoice> table = [] {
    const struct {
      std::vector<Int> K;
      Int k;
      Int p;
    } rows[] = {
        {{-1, -2, -3}, 2, 3},   {{-1, 2, 11}, 2, 11},   {{-1, 2, 5}, 2, 5},     {{-1, 2, 7}, 2, 7},
        {{-1, 3, 5}, 3, 5},     {{-1, 3, 7}, 3, 7},     {{-1, 3, 11}, 3, 11},   {{-1, 3, 19}, 3, 19},
        {{-1, 7, 5}, 7, 5},     {{-1, 7, 13}, 7, 13},   {{-1, 7, 19}, 7, 19},   {{-2, -3, -7}, 6, 7},
        {{-2, -3, -10}, 5, 3},  {{-2, -7, -10}, 5, 7},  {{-3, -7, -15}, 5, 7},  {{-3, -11, -6}, 2, 3},
        {{-3, -11, -19}, 33, 19}, {{-3, -11, 17}, 33, 17},
    };
    std::map<FieldId, BaseChoice> out;
    for (const auto& r : rows) out[field_id(RadicandList(r.K))] = BaseChoice{field_id(RadicandList{r.k}), r.p};
    return out;
  }();
  return table;
}

}  // namespace

DiscriminantData multiquad_discriminant(const RadicandList& list) {
  if (!is_standard_form(list)) throw DomainError("multiquad_discriminant: {" + list.to_string() + "} is not in standard form");
  DiscriminantData out;
  std::set<Int> primes;
  for (Int a : list) {
    for (Int p : prime_divisors(std::abs(a))) {
      if (p != 2) primes.insert(p);
    }
  }
  out.odd_primes.assign(primes.begin(), primes.end());
  const Int a1 = list[0];
  const bool head_even = a1 % 2 == 0;
  // Residue shared by the odd entries (standard form); 1 when there are none.
  int odd_residue = 1;
  for (Int a : list) {
    if (a % 2 != 0) odd_residue = mod4(a);
  }
  if (!head_even) {
    out.e = odd_residue == 1 ? 0 : 2;
  } else {
    out.e = odd_residue == 1 ? 3 : 4;
  }
  mpz_class base = mpz_class(1) << out.e;
  for (Int p : out.odd_primes) base *= p;
  mpz_pow_ui(out.delta.get_mpz_t(), base.get_mpz_t(), 1ul << (list.size() - 1));
  return out;
}

DiscriminantData discriminant_of(const RadicandList& list) {
  return multiquad_discriminant(to_standard_form(primitive_part(list)));
}

std::vector<Int> ramified_primes(const FieldId& field) {
  std::set<Int> primes;
  for (Int a : field.members()) {
    if (mod4(a) != 1) primes.insert(2);
    for (Int p : prime_divisors(std::abs(a))) primes.insert(p);
  }
  return {primes.begin(), primes.end()};
}

std::vector<Int> ramified_primes(const RadicandList& list) { return ramified_primes(field_id(list)); }

InertiaData inertia_field(const RadicandList& input, Int p) {
  if (p < 2 || !is_prime(p)) throw DomainError("inertia_field: " + std::to_string(p) + " is not prime");
  const RadicandList list = primitive_part(input);
  InertiaData out;
  out.p = p;
  const auto ram = ramified_primes(list);
  if (!std::binary_search(ram.begin(), ram.end(), p)) {
    out.generators.assign(list.begin(), list.end());
  } else if (p != 2) {
    const RadicandList headed = to_p_headed(list, p);
    out.ram_index = 2;
    out.generators.assign(headed.begin() + 1, headed.end());
  } else {
    const RadicandList s = to_standard_form(list);
    const Int a1 = s[0];
    if (a1 % 2 != 0) {
      // Every entry is 3 mod 4: the unramified part is spanned by the products a_1 a_j.
      out.ram_index = 2;
      for (std::size_t j = 1; j < s.size(); ++j) out.generators.push_back(squarefree_product(a1, s[j]));
    } else if (s.size() == 1 || mod4(s[1]) == 1) {
      out.ram_index = 2;
      out.generators.assign(s.begin() + 1, s.end());
    } else {
      out.ram_index = 4;
      for (std::size_t j = 2; j < s.size(); ++j) out.generators.push_back(squarefree_product(s[1], s[j]));
    }
  }
  out.field = out.generators.empty() ? FieldId() : field_id(RadicandList(out.generators));
  return out;
}

bool min_ramified_ok(const RadicandList& input) {
  const RadicandList list = primitive_part(input);
  const std::size_t r = ramified_primes(list).size();
  return list.is_imaginary() ? r + 1 >= list.size() : r >= list.size();
}

FieldId maximal_real_subfield(const FieldId& field) {
  std::vector<Int> real;
  for (Int a : field.members()) {
    if (a > 0) real.push_back(a);
  }
  return FieldId(real);
}

bool frolich_even_gate(const RadicandList& input) {
  const FieldId id = field_id(input);
  const FieldId real = id.is_imaginary() ? maximal_real_subfield(id) : id;
  return ramified_primes(real).size() >= 5;
}

bool is_valid_base_choice(const FieldId& K, const BaseChoice& c) {
  if (!K.is_imaginary() || K.degree_exponent() < 3) return false;
  if (c.k.is_imaginary() || c.k.degree_exponent() + 2 != K.degree_exponent() || !K.contains(c.k)) return false;
  if (c.p == 2 || !is_prime(c.p)) return false;
  const auto ram_K = ramified_primes(K);
  const auto ram_k = ramified_primes(c.k);
  return std::binary_search(ram_K.begin(), ram_K.end(), c.p) && !std::binary_search(ram_k.begin(), ram_k.end(), c.p);
}

std::vector<BaseChoice> all_base_choices(const RadicandList& list) {
  const FieldId K = field_id(list);
  if (!K.is_imaginary() || K.degree_exponent() < 3) throw DomainError("base choice needs an imaginary field with n >= 3");
  std::vector<BaseChoice> out;
  const auto ram_K = ramified_primes(K);
  for (const auto& sub : enumerate_subfields(canonical_generators(K), K.degree_exponent() - 2)) {
    const FieldId k = field_id(sub);
    if (k.is_imaginary()) continue;
    for (Int p : ram_K) {
      BaseChoice c{k, p};
      if (is_valid_base_choice(K, c)) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

BaseChoice choose_base_subfield(const RadicandList& list) {
  const FieldId K = field_id(list);
  if (!K.is_imaginary() || K.degree_exponent() < 3) throw DomainError("choose_base_subfield needs an imaginary field with n >= 3");
  if (auto it = table_choices().find(K); it != table_choices().end()) return it->second;
  for (Int p : ramified_primes(K)) {
    if (p == 2) continue;
    const InertiaData in = inertia_field(canonical_generators(K), p);
    if (in.ram_index != 2) continue;
    FieldId k;
    if (in.field.is_imaginary()) {
      k = maximal_real_subfield(in.field);
    } else {
      const auto subs = enumerate_subfields(RadicandList(in.generators), K.degree_exponent() - 2);
      k = field_id(subs.front());
    }
    BaseChoice c{k, p};
    if (!is_valid_base_choice(K, c)) throw InconsistencyError("base field construction failed for {" + K.to_string() + "}");
    return c;
  }
  throw InconsistencyError("no odd prime ramifies in {" + K.to_string() + "}");
}

}  // namespace multiquad
