#include "doctest.h"
#include "multiquad/errors.hpp"
#include "multiquad/ramification.hpp"
#include "multiquad/tables.hpp"
#include "oracles.hpp"

using namespace multiquad;

namespace {

FieldId id(std::vector<Int> gens) { return field_id(RadicandList(std::move(gens))); }

std::vector<Int> oracle_ramified(const std::vector<Int>& gens) {
  std::vector<Int> out;
  mpz_class d = oracle::conductor_discriminant(gens);
  for (Int p = 2; p <= 200; ++p)
    if (oracle::is_prime(p) && mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) out.push_back(p);
  return out;
}

/// [K : T] where T is generated by the members whose quadratic discriminant is prime to p.
int oracle_ram_index(const std::vector<Int>& gens, Int p) {
  std::size_t unram = 0;
  auto cl = oracle::complete_list(gens);
  for (Int m : cl)
    if (oracle::quad_disc(m) % p != 0) ++unram;
  return static_cast<int>((cl.size() + 1) / (unram + 1));
}

}  // namespace

TEST_CASE("discriminants of the named lists") {
  auto a = multiquad_discriminant(RadicandList({-17, -5, 7, -1}));
  CHECK(a.odd_primes == std::vector<Int>{5, 7, 17});
  CHECK(a.delta == oracle::conductor_discriminant({-17, -5, 7, -1}));
  CHECK_THROWS_AS(multiquad_discriminant(RadicandList({-1, 5})), DomainError);
  auto b = discriminant_of(RadicandList({-1, 5}));
  CHECK(b.e == 2);
  CHECK(b.delta == 400);
  auto c = multiquad_discriminant(RadicandList({2, 3, 7, 39}));
  CHECK(c.odd_primes == std::vector<Int>{3, 7, 13});
  CHECK(c.e == 4);
  CHECK(c.delta == oracle::conductor_discriminant({2, 3, 7, 39}));
  CHECK(discriminant_of(RadicandList({2, 3})).delta == 2304);
  CHECK(discriminant_of(RadicandList({-1, -2, -3})).delta == 5308416);
}

TEST_CASE("discriminant agrees with the conductor-discriminant product for n <= 3") {
  std::vector<Int> pool;
  for (Int a = -30; a <= 30; ++a)
    if (a != 0 && a != 1 && oracle::sf(a) == a) pool.push_back(a);
  std::size_t checked = 0;
  auto check = [&](const std::vector<Int>& g) {
    if (oracle::complete_list(g).size() + 1 != (std::size_t{1} << g.size())) return;
    RadicandList l(g);
    CHECK_MESSAGE(discriminant_of(l).delta == oracle::conductor_discriminant(g), l.to_string());
    CHECK(ramified_primes(l) == oracle_ramified(g));
    ++checked;
  };
  const std::size_t N = pool.size();
  for (std::size_t i = 0; i < N; ++i) {
    check({pool[i]});
    for (std::size_t j = i + 1; j < N; ++j) {
      check({pool[i], pool[j]});
      for (std::size_t k = j + 1; k < N; ++k) check({pool[i], pool[j], pool[k]});
    }
  }
  CHECK(checked > 5000);
}

TEST_CASE("ramified primes") {
  CHECK(ramified_primes(RadicandList({-1, 2, 3})) == std::vector<Int>{2, 3});
  CHECK(ramified_primes(RadicandList({-1})) == std::vector<Int>{2});
  CHECK(ramified_primes(RadicandList({-1, 2, 3, 5, 7})) == std::vector<Int>{2, 3, 5, 7});
  CHECK(ramified_primes(RadicandList({-3, 5})) == std::vector<Int>{3, 5});
}

TEST_CASE("inertia fields") {
  auto a = inertia_field(RadicandList({6, 3, 5}), 3);
  CHECK(a.ram_index == 2);
  CHECK(a.field == id({2, 5}));
  auto b = inertia_field(RadicandList({-3, 5, -7, 17}), 2);
  CHECK(b.ram_index == 1);
  CHECK(b.field == id({-3, 5, -7, 17}));
  auto c = inertia_field(RadicandList({2, 3, 7, 39}), 2);
  CHECK(c.ram_index == 4);
  CHECK(c.field == id({21, 13}));
  for (auto g : std::vector<std::vector<Int>>{{-1, 2, 3}, {-1, 3, 7}, {-3, -7, -11}, {2, 6, 7, 13}, {-1, 5, 13}, {-15, 10, 3}}) {
    for (Int p : oracle_ramified(g)) {
      auto d = inertia_field(RadicandList(g), p);
      CHECK(d.ram_index == oracle_ram_index(g, p));
      CHECK(d.field.degree() * static_cast<std::size_t>(d.ram_index) == id(g).degree());
      // p is unramified in the inertia field
      if (d.field.degree_exponent() > 0) {
        std::vector<Int> tg(d.field.members().begin(), d.field.members().end());
        CHECK(oracle::conductor_discriminant(tg) % p != 0);
      }
    }
  }
}

TEST_CASE("ramification gates") {
  CHECK(frolich_even_gate(RadicandList({2, 3, 5, 7, 11})));
  CHECK_FALSE(frolich_even_gate(RadicandList({-1, 2, 3})));
  CHECK(min_ramified_ok(RadicandList({-1, 2, 3})));
  CHECK(frolich_even_gate(RadicandList({-1, 2, 3, 5, 7, 11})));
  CHECK(frolich_even_gate(RadicandList({-1, -2, -3, -5, -7, -11})));
  CHECK(maximal_real_subfield(id({-1, -2, -3})) == id({2, 3}));
  CHECK(maximal_real_subfield(id({-7})).degree_exponent() == 0);
}

TEST_CASE("base subfield choices") {
  auto a = choose_base_subfield(RadicandList({-1, -2, -3}));
  CHECK(a.k == id({2}));
  CHECK(a.p == 3);
  auto b = choose_base_subfield(RadicandList({-3, -11, -19}));
  CHECK(b.k == id({33}));
  CHECK(b.p == 19);
  auto c = choose_base_subfield(RadicandList({-2, -3, -10}));
  CHECK(c.k == id({5}));
  CHECK(c.p == 3);
  std::vector<RadicandList> lists = tables::triquadratic_statement();
  lists.push_back(RadicandList({-1, 2, 7}));
  for (const auto& l : lists) {
    BaseChoice ch = choose_base_subfield(l);
    CHECK(is_valid_base_choice(field_id(l), ch));
    CHECK_FALSE(ch.k.is_imaginary());
    CHECK(ch.k.degree_exponent() == 1);
    // p ramifies in K and not in k
    std::vector<Int> kg(ch.k.members().begin(), ch.k.members().end());
    CHECK(oracle::conductor_discriminant(kg) % ch.p != 0);
    std::vector<Int> Kg(l.begin(), l.end());
    CHECK(oracle::conductor_discriminant(Kg) % ch.p == 0);
    auto all = all_base_choices(l);
    CHECK(std::any_of(all.begin(), all.end(), [&](const BaseChoice& x) { return x.k == ch.k; }));
    for (const auto& x : all) CHECK(is_valid_base_choice(field_id(l), x));
  }
  CHECK_FALSE(is_valid_base_choice(id({-1, -2, -3}), BaseChoice{id({3}), 3}));
  CHECK(all_base_choices(RadicandList({-3, -11, -19})).size() == 3);
}
