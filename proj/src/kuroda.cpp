#include "multiquad/kuroda.hpp"

#include <algorithm>
#include <set>

#include "multiquad/errors.hpp"
#include "multiquad/quadratic.hpp"

namespace multiquad {

namespace {

std::string braces(const FieldId& f) { return "{" + f.to_string() + "}"; }
std::string field_text(const FieldId& f) { return f.degree_exponent() == 0 ? "Q" : f.to_string(); }

mpq_class power_of_two(long e) {
  mpq_class out = 1;
  if (e >= 0) {
    out = mpz_class(1) << static_cast<unsigned>(e);
  } else {
    out = mpq_class(1, mpz_class(1) << static_cast<unsigned>(-e));
  }
  out.canonicalize();
  return out;
}

Int checked_integer(const mpq_class& v, const std::string& what) {
  if (v.get_den() != 1 || sgn(v) <= 0 || !v.get_num().fits_slong_p()) {
    throw InconsistencyError(what + " gives non-integral class number " + v.get_str());
  }
  return v.get_num().get_si();
}

void merge_datasets(std::vector<std::string>& into, const std::vector<std::string>& more) {
  std::set<std::string> all(into.begin(), into.end());
  all.insert(more.begin(), more.end());
  into.assign(all.begin(), all.end());
}

void note_dataset(std::vector<std::string>& into, const UnitSystem& s) {
  if (s.source == UnitSystem::Source::dataset) merge_datasets(into, {s.origin});
}

Int quadratic_h(const FieldId& f) { return f.degree_exponent() == 0 ? 1 : class_number(f.members()[0]); }

}  // namespace

const std::string* ClassNumberResult::input(const std::string& name) const {
  for (const auto& [k, v] : inputs) {
    if (k == name) return &v;
  }
  return nullptr;
}

std::array<FieldId, 3> intermediate_fields(const FieldId& K, const FieldId& k) {
  if (!K.contains(k) || k.degree_exponent() + 2 != K.degree_exponent()) {
    throw DomainError(braces(K) + " is not a degree 4 extension of " + braces(k));
  }
  std::vector<FieldId> found;
  std::vector<Int> base;
  if (k.degree_exponent() > 0) {
    const RadicandList g = canonical_generators(k);
    base.assign(g.begin(), g.end());
  }
  for (Int m : K.members()) {
    if (k.contains(m)) continue;
    std::vector<Int> gens = base;
    gens.push_back(m);
    const FieldId f = field_id(RadicandList(gens));
    if (std::find(found.begin(), found.end(), f) == found.end()) found.push_back(f);
  }
  if (found.size() != 3) throw InconsistencyError("expected 3 intermediate fields between " + braces(k) + " and " + braces(K));
  std::sort(found.begin(), found.end(), [](const FieldId& a, const FieldId& b) {
    if (a.is_imaginary() != b.is_imaginary()) return a.is_imaginary();
    return a < b;
  });
  return {found[0], found[1], found[2]};
}

KurodaDecomposition decompose(const FieldId& K, const FieldId& k) {
  KurodaDecomposition dec;
  dec.K = K;
  dec.k = k;
  const auto mids = intermediate_fields(K, k);
  dec.k1 = mids[0];
  dec.k2 = mids[1];
  dec.k3 = mids[2];
  dec.d = K.is_imaginary() && !k.is_imaginary() ? static_cast<int>(k.degree()) : 0;
  dec.kappa = static_cast<int>(unit_rank(k));
  return dec;
}

ClassNumberResult kuroda_general(const KurodaDecomposition& dec, Int h1, Int h2, Int h3, Int hk, const mpz_class& q) {
  if (h1 <= 0 || h2 <= 0 || h3 <= 0 || hk <= 0 || q <= 0) throw DomainError("kuroda_general: inputs must be positive");
  const long e = dec.d - dec.kappa - 2 - dec.nu;
  const mpq_class value = power_of_two(e) * mpq_class(q * h1 * h2 * h3) / mpq_class(mpz_class(hk) * hk);
  ClassNumberResult r;
  r.field = dec.K;
  r.formula = "kuroda";
  r.inputs = {{"k", field_text(dec.k)},
              {"k1", dec.k1.to_string()},
              {"k2", dec.k2.to_string()},
              {"k3", dec.k3.to_string()},
              {"d", std::to_string(dec.d)},
              {"kappa", std::to_string(dec.kappa)},
              {"nu", std::to_string(dec.nu)},
              {"q(K/k)", q.get_str()},
              {"h1", std::to_string(h1)},
              {"h2", std::to_string(h2)},
              {"h3", std::to_string(h3)},
              {"hk", std::to_string(hk)}};
  std::string what = "Kuroda's formula for " + braces(dec.K) + " over " + braces(dec.k) + " (";
  for (std::size_t i = 0; i < r.inputs.size(); ++i) what += (i ? ", " : "") + r.inputs[i].first + "=" + r.inputs[i].second;
  r.h = checked_integer(value, what + ")");
  return r;
}

ClassNumberResult small_kuroda(const KurodaDecomposition& dec, Int h1, Int h2, Int h3, Int hk, const mpz_class& q) {
  const std::size_t n = dec.K.degree_exponent();
  if (!dec.K.is_imaginary() || n < 3 || dec.k.is_imaginary() || dec.nu != 0 ||
      dec.d != (1 << (n - 2)) || dec.kappa != (1 << (n - 2)) - 1) {
    throw DomainError("small_kuroda: " + braces(dec.K) + " over " + braces(dec.k) + " is not an imaginary field over a real base with nu = 0");
  }
  ClassNumberResult r = kuroda_general(dec, h1, h2, h3, hk, q);
  r.formula = "small_kuroda";
  return r;
}

Int P_product(const FieldId& K) {
  Int p = 1;
  for (Int a : K.members()) {
    if (a < 0) p *= class_number(a);
  }
  return p;
}

mpq_class h_lower_bound(const FieldId& K, const std::map<Int, Int>* known) {
  if (!K.is_imaginary()) throw DomainError("h_lower_bound needs an imaginary field");
  const std::size_t n = K.degree_exponent();
  mpq_class bound = power_of_two(-((1l << (n - 1)) - 1));
  for (Int a : K.members()) {
    if (a > 0) continue;
    Int h = 8;
    if (!known) {
      h = class_number(a);
    } else if (auto it = known->find(a); it != known->end()) {
      h = it->second;
    }
    bound *= (h == 1 || h == 2 || h == 4) ? h : 8;
  }
  bound.canonicalize();
  return bound;
}

IndexResult ClassNumberEngine::relative_unit_index(const FieldId& K, const FieldId& k) {
  const auto mids = intermediate_fields(K, k);
  const UnitSystem& big = units_.get(K);
  const UnitSystem* subs[] = {&units_.get(mids[0]), &units_.get(mids[1]), &units_.get(mids[2])};
  return unit_index(big, subs);
}

int ClassNumberEngine::nu(const FieldId& K, const FieldId& k) {
  const auto ram_K = ramified_primes(K);
  const auto ram_k = ramified_primes(k);
  for (Int p : ram_K) {
    if (p != 2 && !std::binary_search(ram_k.begin(), ram_k.end(), p)) return 0;
  }
  // E(Q)/E(Q)^2 has order 2, too small to generate a degree 4 extension.
  if (k.degree_exponent() == 0) return 0;
  const UnitSystem& s = units_.get(k);
  std::vector<MQElement> basis{s.torsion.generator};
  basis.insert(basis.end(), s.fundamental.begin(), s.fundamental.end());
  auto big = MultiquadField::get(K);
  std::size_t squares = 0;
  for (unsigned mask = 0; mask < (1u << basis.size()); ++mask) {
    MQElement x(basis[0].field(), 1);
    for (unsigned b = 0; b < basis.size(); ++b) {
      if (mask >> b & 1) x = x * basis[b];
    }
    if (x.lift(big).sqrt()) ++squares;
  }
  if (squares != 1 && squares != 2 && squares != 4) throw InconsistencyError("unit square classes of " + braces(k) + " in " + braces(K) + " do not form a group");
  return squares == 4 ? 1 : 0;
}

ClassNumberResult ClassNumberEngine::class_number(const FieldId& K) {
  {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(K); it != memo_.end()) return it->second;
  }
  ClassNumberResult r;
  if (K.degree_exponent() <= 1) {
    r.field = K;
    r.h = quadratic_h(K);
    r.formula = "quadratic";
  } else if (K.is_imaginary()) {
    return big_kuroda(K);
  } else {
    r = real_class_number(K);
  }
  std::lock_guard lock(mu_);
  return memo_.emplace(K, r).first->second;
}

ClassNumberResult ClassNumberEngine::real_class_number(const FieldId& K) {
  const std::size_t n = K.degree_exponent();
  FieldId k;
  if (n >= 3) k = field_id(enumerate_subfields(canonical_generators(K), n - 2).front());
  KurodaDecomposition dec = decompose(K, k);
  dec.nu = nu(K, k);
  const IndexResult q = relative_unit_index(K, k);
  std::vector<ClassNumberResult> parts{class_number(dec.k1), class_number(dec.k2), class_number(dec.k3)};
  const Int hk = n >= 3 ? class_number(k).h : 1;
  ClassNumberResult r = kuroda_general(dec, parts[0].h, parts[1].h, parts[2].h, hk, q.q);
  r.unit_witnesses = q.witnesses;
  r.parts = std::move(parts);
  note_dataset(r.datasets, units_.get(K));
  for (const auto& p : r.parts) merge_datasets(r.datasets, p.datasets);
  return r;
}

ClassNumberResult ClassNumberEngine::big_kuroda(const FieldId& K, std::optional<BaseChoice> base) {
  const std::size_t n = K.degree_exponent();
  if (!K.is_imaginary() || n < 2) throw DomainError("big_kuroda needs an imaginary field with n >= 2, got " + braces(K));
  if (!base) {
    std::lock_guard lock(mu_);
    if (auto it = memo_.find(K); it != memo_.end()) return it->second;
  }
  ClassNumberResult r;
  r.field = K;
  r.formula = "big_kuroda";
  const Int P = P_product(K);
  if (n == 2) {
    const KurodaDecomposition dec = decompose(K, FieldId());
    const IndexResult q = relative_unit_index(K, FieldId());
    const Int h1 = quadratic_h(dec.k1), h2 = quadratic_h(dec.k2), h3 = quadratic_h(dec.k3);
    const ClassNumberResult check = kuroda_general(dec, h1, h2, h3, 1, q.q);
    const mpq_class value = mpq_class(1, 2) * mpq_class(q.q * P * h3);
    r.h = checked_integer(value, "big_kuroda for " + braces(K));
    if (r.h != check.h || P != h1 * h2) throw InconsistencyError("biquadratic formulas disagree for " + braces(K));
    r.inputs = {{"k1", dec.k1.to_string()}, {"k2", dec.k2.to_string()}, {"k3", dec.k3.to_string()},
                {"q(K/Q)", q.q.get_str()}, {"Q", q.q.get_str()}, {"P", std::to_string(P)},
                {"h3", std::to_string(h3)}};
    r.unit_witnesses = q.witnesses;
  } else {
    const BaseChoice c = base ? *base : choose_base_subfield(canonical_generators(K));
    if (!is_valid_base_choice(K, c)) {
      throw DomainError("invalid base " + braces(c.k) + ", p = " + std::to_string(c.p) + " for " + braces(K));
    }
    const KurodaDecomposition dec = decompose(K, c.k);
    const IndexResult q = relative_unit_index(K, c.k);
    ClassNumberResult r1 = big_kuroda(dec.k1);
    ClassNumberResult r2 = big_kuroda(dec.k2);
    ClassNumberResult r3 = class_number(dec.k3);
    const Int hk = class_number(c.k).h;
    const mpz_class Q1(*r1.input("Q")), Q2(*r2.input("Q"));
    const mpz_class Q = q.q * Q1 * Q2;
    if (P != P_product(dec.k1) * P_product(dec.k2)) {
      throw InconsistencyError("imaginary quadratic subfields of " + braces(dec.k1) + " and " + braces(dec.k2) + " do not partition those of " + braces(K));
    }
    const mpq_class value = power_of_two(-((1l << (n - 1)) - 1)) * mpq_class(Q * P * r3.h);
    r.h = checked_integer(value, "big_kuroda for " + braces(K) + " (Q=" + Q.get_str() + ", P=" + std::to_string(P) + ", h3=" + std::to_string(r3.h) + ")");
    const ClassNumberResult check = small_kuroda(dec, r1.h, r2.h, r3.h, hk, q.q);
    if (check.h != r.h) {
      throw InconsistencyError("big and small Kuroda disagree for " + braces(K) + ": " + std::to_string(r.h) + " vs " + std::to_string(check.h));
    }
    r.inputs = {{"k", c.k.to_string()}, {"p", std::to_string(c.p)},
                {"k1", dec.k1.to_string()}, {"k2", dec.k2.to_string()}, {"k3", dec.k3.to_string()},
                {"nu", "0"},
                {"q(K/k)", q.q.get_str()}, {"Q(k1)", Q1.get_str()}, {"Q(k2)", Q2.get_str()},
                {"Q", Q.get_str()}, {"P", std::to_string(P)}, {"h3", std::to_string(r3.h)},
                {"h(k)", std::to_string(hk)}};
    r.unit_witnesses = q.witnesses;
    r.parts = {std::move(r1), std::move(r2), std::move(r3)};
  }
  note_dataset(r.datasets, units_.get(K));
  for (const auto& p : r.parts) merge_datasets(r.datasets, p.datasets);
  if (!base) {
    std::lock_guard lock(mu_);
    memo_.emplace(K, r);
  }
  return r;
}

}  // namespace multiquad
