#include "multiquad/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "multiquad/errors.hpp"
#include "multiquad/quadratic.hpp"
#include "multiquad/tables.hpp"

namespace multiquad {

namespace {

// Scan bounds for h(-a) = 1, 2, 4; the lists are known to be complete below them.
constexpr Int kBound1 = 200;
constexpr Int kBound2 = 430;
constexpr Int kBound4 = 1560;

const std::vector<Int>& scanned(Int h) {
  static const std::vector<Int> l1 = fields_with_class_number(1, kBound1);
  static const std::vector<Int> l2 = fields_with_class_number(2, kBound2);
  static const std::vector<Int> l4 = fields_with_class_number(4, kBound4);
  switch (h) {
    case 1: return l1;
    case 2: return l2;
    case 4: return l4;
    default: throw DomainError("no scanned list for h = " + std::to_string(h));
  }
}

// -a -> h for every imaginary radicand with h in the given set.
std::map<Int, Int> imaginary_with_h(std::initializer_list<Int> hs) {
  std::map<Int, Int> out;
  for (Int h : hs) {
    for (Int a : scanned(h)) out[-a] = h;
  }
  return out;
}

std::string braces(const FieldId& f) { return "{" + display_list(f).to_string() + "}"; }

std::string join_ints(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::set<FieldId> id_set(const std::vector<RadicandList>& lists) {
  std::set<FieldId> out;
  for (const auto& l : lists) out.insert(field_id(l));
  return out;
}

std::set<FieldId> id_set(const std::vector<FieldId>& ids) { return {ids.begin(), ids.end()}; }

// Final-list mismatches clear matches_table; candidate-list ones are only reported.
void compare_sets(const std::string& what, const std::set<FieldId>& computed, const std::set<FieldId>& table,
                  StageReport& report, bool final_list = true) {
  std::vector<std::string> missing, extra;
  for (const auto& f : table) {
    if (!computed.count(f)) missing.push_back(braces(f));
  }
  for (const auto& f : computed) {
    if (!table.count(f)) extra.push_back(braces(f));
  }
  if (missing.empty() && extra.empty()) {
    report.audit.push_back(what + ": matches the published list (" + std::to_string(table.size()) + " fields)");
    return;
  }
  if (final_list) report.matches_table = false;
  std::string d = what + ":";
  for (const auto& m : missing) d += " missing " + m;
  for (const auto& e : extra) d += " extra " + e;
  report.discrepancies.push_back(d);
}

template <class T, class R>
std::vector<R> parallel_map(const std::vector<T>& items, unsigned jobs, const std::function<R(const T&)>& fn) {
  std::vector<R> out(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        out[i] = fn(items[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::max(1u, jobs); ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

Candidate make_candidate(const FieldId& f) {
  Candidate c;
  c.field = f;
  c.list = display_list(f);
  c.P = P_product(f);
  for (Int a : f.members()) {
    if (a < 0) c.imaginary_h.push_back(class_number(a));
  }
  std::sort(c.imaginary_h.begin(), c.imaginary_h.end());
  return c;
}

std::string triquadratic_label(const std::vector<Int>& h) {
  const std::map<std::vector<Int>, std::string> labels{
      {{1, 1, 1, 1}, "P=1"},       {{1, 1, 1, 2}, "P=2"},       {{1, 1, 1, 4}, "P=4 (i)"},
      {{1, 1, 2, 2}, "P=4 (ii)"},  {{1, 2, 2, 2}, "P=8 (i)"},   {{1, 1, 2, 4}, "P=8 (ii)"},
      {{1, 1, 1, 8}, "P=8 (iii)"},
  };
  auto it = labels.find(h);
  return it == labels.end() ? "" : it->second;
}

Evaluation evaluate_full(ClassNumberEngine& engine, const Candidate& c, bool allow_undecided) {
  Evaluation e;
  e.candidate = c;
  try {
    ClassNumberResult r = engine.class_number(c.field);
    e.h = r.h;
    e.status = r.h == 1 ? Evaluation::Status::class_number_one : Evaluation::Status::eliminated;
    e.witness = "h = " + std::to_string(r.h);
    e.trace = std::move(r);
  } catch (const DatasetRequired& ex) {
    if (!allow_undecided) throw;
    e.status = Evaluation::Status::undecided;
    e.witness = "undecided-needs-dataset: " + ex.field();
  }
  return e;
}

// P = 8: h = q(K/k) q(k1/Q) q(k2/Q) h3, so any factor above 1 rules the field out.
Evaluation evaluate_p8(ClassNumberEngine& engine, const Candidate& c, bool allow_undecided) {
  Evaluation e;
  e.candidate = c;
  const BaseChoice base = choose_base_subfield(c.list);
  const KurodaDecomposition dec = decompose(c.field, base.k);
  const ClassNumberResult r1 = engine.big_kuroda(dec.k1);
  const ClassNumberResult r2 = engine.big_kuroda(dec.k2);
  const ClassNumberResult r3 = engine.class_number(dec.k3);
  const std::pair<std::string, mpz_class> cheap[] = {
      {"q(k1/Q) for {" + display_list(dec.k1).to_string() + "}", mpz_class(*r1.input("Q"))},
      {"q(k2/Q) for {" + display_list(dec.k2).to_string() + "}", mpz_class(*r2.input("Q"))},
      {"h3 for {" + display_list(dec.k3).to_string() + "}", mpz_class(r3.h)},
  };
  for (const auto& [name, value] : cheap) {
    if (value > 1 && e.witness.empty()) e.witness = name + " = " + value.get_str();
  }
  try {
    ClassNumberResult full = engine.big_kuroda(c.field, base);
    e.h = full.h;
    if (e.witness.empty()) {
      const std::string q = *full.input("q(K/k)");
      if (q != "1") e.witness = "q(K/k) over {" + base.k.to_string() + "} = " + q;
    }
    e.trace = std::move(full);
  } catch (const DatasetRequired& ex) {
    if (e.witness.empty()) {
      if (!allow_undecided) throw;
      e.status = Evaluation::Status::undecided;
      e.witness = "undecided-needs-dataset: " + ex.field();
      return e;
    }
  }
  if (e.witness.empty()) {
    // Every factor is 1: the field would have class number 1.
    e.status = Evaluation::Status::class_number_one;
    e.witness = "h = 1";
  } else {
    e.status = Evaluation::Status::eliminated;
  }
  return e;
}

}  // namespace

std::size_t CandidateSet::count(const std::string& prefix) const {
  return static_cast<std::size_t>(std::count_if(candidates.begin(), candidates.end(), [&](const Candidate& c) {
    return c.label.compare(0, prefix.size(), prefix) == 0;
  }));
}

std::string to_string(Evaluation::Status s) {
  switch (s) {
    case Evaluation::Status::class_number_one: return "class-number-1";
    case Evaluation::Status::eliminated: return "eliminated";
    case Evaluation::Status::undecided: return "undecided";
  }
  return "?";
}

RadicandList display_list(const FieldId& field) {
  const RadicandList gens = canonical_generators(field);
  return field.is_imaginary() ? to_negative_form(gens) : gens;
}

std::vector<Int> classify_n1(Int bound) {
  if (bound < 1) throw DomainError("classify_n1: bound must be positive");
  std::vector<Int> out;
  for (Int a : fields_with_class_number(1, bound)) out.push_back(-a);
  return out;
}

StageReport classify_n1_report(Int bound) {
  StageReport r;
  r.n = 1;
  for (Int a : classify_n1(bound)) r.class_number_one.push_back(field_id(RadicandList{a}));
  std::vector<RadicandList> table;
  for (Int a : tables::class_number_1()) table.push_back(RadicandList{-a});
  r.audit.push_back("scanned squarefree 0 < a <= " + std::to_string(bound));
  compare_sets("imaginary quadratic fields", id_set(r.class_number_one), id_set(table), r);
  return r;
}

StageReport classify_n2(ClassNumberEngine& engine, const ClassifierOptions& options) {
  StageReport r;
  r.n = 2;
  // h = q h1 h2 h3 / 2 with q in {1, 2}, so h = 1 needs h1 h2 <= 2.
  const auto h12 = imaginary_with_h({1, 2});
  std::vector<Int> radicands;
  for (const auto& [a, h] : h12) radicands.push_back(a);
  std::set<FieldId> seen;
  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < radicands.size(); ++i) {
    for (std::size_t j = i + 1; j < radicands.size(); ++j) {
      if (h12.at(radicands[i]) * h12.at(radicands[j]) > 2) continue;
      const FieldId f = field_id(RadicandList{radicands[i], radicands[j]});
      if (seen.insert(f).second) candidates.push_back(make_candidate(f));
    }
  }
  r.audit.push_back(std::to_string(candidates.size()) + " biquadratic candidates with P <= 2");
  const std::function<Evaluation(const Candidate&)> fn = [&](const Candidate& c) {
    return evaluate_full(engine, c, options.allow_undecided);
  };
  r.evaluations = parallel_map(candidates, options.jobs, fn);
  for (const auto& e : r.evaluations) {
    if (e.status == Evaluation::Status::class_number_one) r.class_number_one.push_back(e.candidate.field);
  }
  std::sort(r.class_number_one.begin(), r.class_number_one.end());
  compare_sets("imaginary biquadratic fields", id_set(r.class_number_one), id_set(tables::biquadratic()), r);
  const std::size_t found = r.class_number_one.size();
  if (found != tables::kBiquadraticCountStatement || found != tables::kBiquadraticCountSummary) {
    r.discrepancies.push_back("biquadratic count: the classification statement gives " + std::to_string(tables::kBiquadraticCountStatement) +
                              ", the summary gives " + std::to_string(tables::kBiquadraticCountSummary) +
                              ", the printed table has " + std::to_string(tables::biquadratic().size()) +
                              " entries, computed " + std::to_string(found));
  }
  return r;
}

CandidateSet candidates_n3() {
  CandidateSet out;
  out.n = 3;
  const auto known = imaginary_with_h({1, 2, 4});
  std::vector<Int> radicands;
  for (const auto& [a, h] : known) radicands.push_back(a);
  std::set<FieldId> seen;
  std::size_t p1 = 0;
  std::size_t composite_checks = 0;
  for (std::size_t i = 0; i < radicands.size(); ++i) {
    for (std::size_t j = i + 1; j < radicands.size(); ++j) {
      for (std::size_t k = j + 1; k < radicands.size(); ++k) {
        const Int a1 = radicands[i], a2 = radicands[j], a3 = radicands[k];
        const Int h123 = known.at(a1) * known.at(a2) * known.at(a3);
        if (h123 > 8) continue;
        const Int a4 = -squarefree_product(squarefree_product(-a1, -a2), -a3);
        Int h4 = 0;
        if (auto it = known.find(a4); it != known.end()) {
          h4 = it->second;
        } else if (h123 == 1) {
          // Not in the h <= 4 lists, so a power of 2 would have to be 8.
          h4 = class_number(a4);
        } else {
          continue;
        }
        if (h123 == 1) {
          ++composite_checks;
          if (is_prime(-a4) || a4 == -1) {
            out.audit.push_back("unexpected: class number 1 triple with prime a4 = " + std::to_string(-a4));
          }
        }
        const Int P = h123 * h4;
        if (P > 8 || (P & (P - 1)) != 0) continue;
        const FieldId f = field_id(RadicandList{a1, a2, a3});
        if (!seen.insert(f).second) continue;
        Candidate c = make_candidate(f);
        if (c.P != P) throw InconsistencyError("P mismatch for " + braces(f));
        c.label = triquadratic_label(c.imaginary_h);
        if (c.label == "P=1") {
          ++p1;
          continue;
        }
        if (c.label.empty()) throw InconsistencyError("unlabelled candidate " + braces(f));
        out.candidates.push_back(std::move(c));
      }
    }
  }
  std::sort(out.candidates.begin(), out.candidates.end(),
            [](const Candidate& a, const Candidate& b) { return std::tie(a.P, a.label, a.field) < std::tie(b.P, b.label, b.field); });
  out.audit.push_back("P=1: " + std::to_string(p1) + " fields; a4 composite for all " + std::to_string(composite_checks) +
                      " triples of class number 1 radicands");
  return out;
}

StageReport classify_n3(ClassNumberEngine& engine, const CandidateSet& set, const ClassifierOptions& options) {
  StageReport r;
  r.n = 3;
  r.audit = set.audit;
  for (const char* label : {"P=2", "P=4", "P=4 (i)", "P=4 (ii)", "P=8", "P=8 (i)", "P=8 (ii)", "P=8 (iii)"}) {
    r.audit.push_back(std::string(label) + ": " + std::to_string(set.count(label)) + " candidates");
  }
  // Reference comparisons for the candidate lists.
  auto by_prefix = [&](const std::string& prefix) {
    std::set<FieldId> out;
    for (const auto& c : set.candidates) {
      if (c.label.compare(0, prefix.size(), prefix) == 0) out.insert(c.field);
    }
    return out;
  };
  compare_sets("P=2 candidates", by_prefix("P=2"), id_set(tables::candidates_p2()), r, false);
  compare_sets("P=4 candidates", by_prefix("P=4"), id_set(tables::candidates_p4()), r, false);
  compare_sets("P=8 (i) candidates", by_prefix("P=8 (i)"), id_set(tables::candidates_p8_case_i()), r, false);
  compare_sets("P=8 (ii) candidates", by_prefix("P=8 (ii)"), id_set(tables::candidates_p8_case_ii()), r, false);
  {
    // The printed (ii) table matches the fields where a1 a2 a3 is already squarefree,
    // with a1, a2 the class number 1 radicands and a3 the class number 2 one.
    std::set<FieldId> squarefree_product_case;
    for (const auto& c : set.candidates) {
      if (c.label != "P=8 (ii)") continue;
      Int product = 1;
      for (Int a : c.field.members()) {
        if (a < 0 && class_number(a) <= 2) product *= -a;
      }
      if (is_squarefree(product)) squarefree_product_case.insert(c.field);
    }
    StageReport sub;
    compare_sets("P=8 (ii) candidates with a1 a2 a3 squarefree", squarefree_product_case, id_set(tables::candidates_p8_case_ii()), sub, false);
    r.audit.insert(r.audit.end(), sub.audit.begin(), sub.audit.end());
    r.discrepancies.insert(r.discrepancies.end(), sub.discrepancies.begin(), sub.discrepancies.end());
  }
  compare_sets("P=8 (iii) candidates", by_prefix("P=8 (iii)"), id_set(tables::candidates_p8_case_iii()), r, false);
  std::set<Int> a4_computed;
  for (const auto& c : set.candidates) {
    if (c.label != "P=4 (i)") continue;
    for (Int a : c.field.members()) {
      if (a < 0 && class_number(a) == 4) a4_computed.insert(-a);
    }
  }
  const std::set<Int> a4_table(tables::candidates_p4_case_i_a4().begin(), tables::candidates_p4_case_i_a4().end());
  if (a4_computed == a4_table) {
    r.audit.push_back("P=4 (i) a4 values: " + join_ints({a4_computed.begin(), a4_computed.end()}));
  } else {
    r.discrepancies.push_back("P=4 (i) a4 values differ: computed " + join_ints({a4_computed.begin(), a4_computed.end()}));
  }
  r.discrepancies.push_back("P=8 (ii) table is printed without minus signs; its entries are read as negative radicands");
  for (const auto& l : tables::candidates_p4()) {
    if (!is_primitive(l)) r.discrepancies.push_back("printed list {" + l.to_string() + "} is not primitive");
  }
  r.audit.push_back("printed list {-3,-7,-15} checked: primitive (-15 is not sf(-3 * -7))");

  const std::function<Evaluation(const Candidate&)> fn = [&](const Candidate& c) {
    return c.P == 8 ? evaluate_p8(engine, c, options.allow_undecided) : evaluate_full(engine, c, options.allow_undecided);
  };
  r.evaluations = parallel_map(set.candidates, options.jobs, fn);
  for (const auto& e : r.evaluations) {
    if (e.status == Evaluation::Status::class_number_one) r.class_number_one.push_back(e.candidate.field);
  }
  std::sort(r.class_number_one.begin(), r.class_number_one.end());
  const auto computed = id_set(r.class_number_one);
  compare_sets("imaginary triquadratic fields (summary table)", computed, id_set(tables::triquadratic_summary()), r);
  compare_sets("imaginary triquadratic fields (statement table)", computed, id_set(tables::triquadratic_statement()), r);
  return r;
}

QuarticSearch quartic_search() {
  QuarticSearch out;
  const auto known = imaginary_with_h({1, 2, 4});
  std::vector<Int> radicands;
  for (const auto& [a, h] : known) radicands.push_back(a);
  std::set<FieldId> S;
  for (std::size_t i = 0; i < radicands.size(); ++i) {
    for (std::size_t j = i + 1; j < radicands.size(); ++j) {
      for (std::size_t k = j + 1; k < radicands.size(); ++k) {
        const Int a4 = -squarefree_product(squarefree_product(-radicands[i], -radicands[j]), -radicands[k]);
        if (known.count(a4)) S.insert(field_id(RadicandList{radicands[i], radicands[j], radicands[k]}));
      }
    }
  }
  out.S.assign(S.begin(), S.end());
  std::set<FieldId> T;
  for (const auto& k1 : out.S) {
    const RadicandList gens = canonical_generators(k1);
    for (Int a : radicands) {
      if (k1.contains(a)) continue;
      std::vector<Int> l(gens.begin(), gens.end());
      l.push_back(a);
      T.insert(field_id(RadicandList(l)));
    }
  }
  out.T_size = T.size();
  for (const auto& K : T) {
    if (h_lower_bound(K, &known) <= 1) out.survivors.push_back(K);
  }
  return out;
}

StageReport classify_n4(ClassNumberEngine& engine, const ClassifierOptions& options) {
  StageReport r;
  r.n = 4;
  const QuarticSearch search = quartic_search();
  r.audit.push_back("S: " + std::to_string(search.S.size()) + " imaginary triquadratic fields with every imaginary quadratic h in {1,2,4}");
  r.audit.push_back("T: " + std::to_string(search.T_size) + " extensions k1(sqrt(-a)) with h(-a) in {1,2,4}");
  r.audit.push_back(std::to_string(search.T_size - search.survivors.size()) + " eliminated by (1/2)^7 P > 1; " +
                    std::to_string(search.survivors.size()) + " candidates remain");
  std::vector<RadicandList> table;
  std::map<FieldId, Int> table_h;
  for (const auto& c : tables::candidates_n4()) {
    table.push_back(c.list);
    table_h[field_id(c.list)] = c.h;
  }
  compare_sets("4-quadratic candidates", id_set(search.survivors), id_set(table), r);
  std::vector<Candidate> candidates;
  for (const auto& f : search.survivors) candidates.push_back(make_candidate(f));
  const std::function<Evaluation(const Candidate&)> fn = [&](const Candidate& c) {
    return evaluate_full(engine, c, options.allow_undecided);
  };
  r.evaluations = parallel_map(candidates, options.jobs, fn);
  for (const auto& e : r.evaluations) {
    if (e.status == Evaluation::Status::class_number_one) r.class_number_one.push_back(e.candidate.field);
    auto it = table_h.find(e.candidate.field);
    if (e.h && it != table_h.end() && *e.h != it->second) {
      r.matches_table = false;
      r.discrepancies.push_back(braces(e.candidate.field) + ": computed h = " + std::to_string(*e.h) + ", published " + std::to_string(it->second));
    }
  }
  return r;
}

std::vector<StageReport> classify_n5_and_up() {
  StageReport five;
  five.n = 5;
  // Parity gate on the maximal real subfield K+ (real 4-quadratic): unless it fires,
  // exactly 4 primes ramify in K+, so K+ = Q(sqrt q1, ..., sqrt q4) and K = K+(sqrt -m).
  {
    const RadicandList span{-1, 2, 3, 5, 7, 11};
    std::size_t imaginary = 0, gated = 0, shaped = 0;
    for (const auto& sub : enumerate_subfields(span, 5)) {
      const FieldId f = field_id(sub);
      if (!f.is_imaginary()) continue;
      ++imaginary;
      if (frolich_even_gate(sub)) {
        ++gated;
        continue;
      }
      const FieldId real = maximal_real_subfield(f);
      const auto ram = ramified_primes(real);
      const bool prime_generated =
          ram.size() == 4 && std::all_of(ram.begin(), ram.end(), [&](Int q) { return real.contains(q); });
      if (prime_generated) ++shaped;
    }
    five.audit.push_back("imaginary 5-quadratic subfields of Q(sqrt -1, sqrt 2, ..., sqrt 11): " + std::to_string(imaginary) +
                         "; even by the parity gate on K+: " + std::to_string(gated) +
                         "; remaining with K+ = Q(sqrt q1, ..., sqrt q4): " + std::to_string(shaped) + " of " +
                         std::to_string(imaginary - gated));
    if (shaped != imaginary - gated) five.discrepancies.push_back("n=5 shape check failed");
  }
  // The imaginary quadratic subfields of K+(sqrt -m) are -m s for the 16 products s
  // of the q_i; with t primes of m outside {q_i} their prime counts are |s| + t.
  std::size_t max_primes_h1 = 0, max_primes_h2 = 0;
  for (Int a : scanned(1)) max_primes_h1 = std::max(max_primes_h1, prime_divisors(a).size());
  for (Int a : scanned(2)) max_primes_h2 = std::max(max_primes_h2, prime_divisors(a).size());
  five.audit.push_back("h(-a) = 1 radicands have at most " + std::to_string(max_primes_h1) +
                       " prime factor; h(-a) = 2 radicands at most " + std::to_string(max_primes_h2));
  // With h_K = 1 every factor of P is a power of 2, so the least value per prime count is 1, 2 or 4.
  auto least_h = [&](std::size_t primes) -> Int { return primes <= max_primes_h1 ? 1 : primes <= max_primes_h2 ? 2 : 4; };
  const mpz_class limit = mpz_class(1) << 15;
  for (std::size_t t = 0; t <= 1; ++t) {
    std::map<std::size_t, std::size_t> census;
    for (unsigned s = 0; s < 16; ++s) census[static_cast<std::size_t>(popcount(s)) + t]++;
    mpz_class bound = 1;
    for (const auto& [primes, count] : census) {
      for (std::size_t i = 0; i < count; ++i) bound *= least_h(primes);
    }
    std::size_t three_plus = 0;
    for (const auto& [primes, count] : census) {
      if (primes >= 3) three_plus += count;
    }
    five.audit.push_back("t = " + std::to_string(t) + ": census radicand -1: " + std::to_string(census[0]) + ", prime: " +
                         std::to_string(census[1]) + ", two primes: " + std::to_string(census[2]) + ", three or more: " +
                         std::to_string(three_plus) + "; P >= " + bound.get_str() + " = 2^" +
                         std::to_string(mpz_sizeinbase(bound.get_mpz_t(), 2) - 1) + " > 2^15");
    if (bound <= limit) five.discrepancies.push_back("n=5 bound does not exceed 2^15 for t = " + std::to_string(t));
  }
  five.audit.push_back("larger t only raises every prime count, so the bound holds for all m");

  StageReport six;
  six.n = 6;
  std::size_t checked = 0, gated = 0;
  for (const RadicandList& l : {RadicandList{-1, -2, -3, -5, -7, -11}, RadicandList{-1, 2, 3, 5, 7, 11},
                                RadicandList{-3, -7, -11, -19, -43, -67}, RadicandList{-1, -2, -3, -7, -11, -19},
                                RadicandList{-5, -6, -10, -13, -15, -22}}) {
    ++checked;
    if (frolich_even_gate(l)) ++gated;
  }
  six.audit.push_back("the maximal real subfield of an imaginary 6-quadratic field is 5-quadratic, so at least 5 primes ramify in it");
  six.audit.push_back("parity gate fired on " + std::to_string(gated) + " of " + std::to_string(checked) + " sample fields");
  if (gated != checked) six.discrepancies.push_back("n=6 parity gate failed on a sample field");
  return {five, six};
}

ClassificationReport full_report(ClassNumberEngine& engine, const ClassifierOptions& options) {
  ClassificationReport out;
  out.stages.push_back(classify_n1_report(options.n1_bound));
  out.stages.push_back(classify_n2(engine, options));
  out.stages.push_back(classify_n3(engine, candidates_n3(), options));
  out.stages.push_back(classify_n4(engine, options));
  for (auto& s : classify_n5_and_up()) out.stages.push_back(std::move(s));
  for (const auto& s : out.stages) {
    out.matches_tables = out.matches_tables && s.matches_table;
    if (s.n >= 4 && !s.class_number_one.empty()) out.matches_tables = false;
    for (const auto& d : s.discrepancies) out.discrepancies.push_back("n=" + std::to_string(s.n) + ": " + d);
  }
  return out;
}

}  // namespace multiquad
