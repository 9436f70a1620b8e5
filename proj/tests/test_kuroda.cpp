#include "doctest.h"
#include "multiquad/classifier.hpp"
#include "multiquad/errors.hpp"
#include "multiquad/kuroda.hpp"
#include "multiquad/quadratic.hpp"
#include "multiquad/tables.hpp"

using namespace multiquad;

namespace {

FieldId id(std::vector<Int> gens) { return field_id(RadicandList(std::move(gens))); }

std::string in(const ClassNumberResult& r, const std::string& name) {
  const std::string* v = r.input(name);
  REQUIRE_MESSAGE(v != nullptr, name);
  return *v;
}

UnitProvider& bundled() {
  static UnitProvider p({MULTIQUAD_TEST_DATA_DIR, false});
  return p;
}

UnitProvider& computing() {
  static UnitProvider p({"", true});
  return p;
}

}  // namespace

TEST_CASE("intermediate fields and decomposition") {
  auto mids = intermediate_fields(id({-1, -2, -3}), id({2}));
  CHECK(mids[0] == id({-1, 2}));
  CHECK(mids[1] == id({2, -3}));
  CHECK(mids[2] == id({2, 3}));
  auto q = intermediate_fields(id({-1, 2}), FieldId());
  CHECK(q[0] == id({-1}));
  CHECK(q[1] == id({-2}));
  CHECK(q[2] == id({2}));
  auto dec = decompose(id({-1, -2, -3}), id({2}));
  CHECK(dec.d == 2);
  CHECK(dec.kappa == 1);
  auto real = decompose(id({2, 3}), FieldId());
  CHECK(real.d == 0);
  CHECK(real.kappa == 0);
  CHECK_THROWS_AS(intermediate_fields(id({-1, -2, -3}), id({5})), DomainError);
}

TEST_CASE("general formula") {
  auto dec = decompose(id({2, 3}), FieldId());
  CHECK(kuroda_general(dec, 1, 1, 1, 1, 4).h == 1);
  auto imag = decompose(id({-1, 2}), FieldId());
  CHECK(kuroda_general(imag, 1, 1, 1, 1, 2).h == 1);
  CHECK_THROWS_AS(kuroda_general(dec, 1, 1, 1, 1, 2), InconsistencyError);
  auto oct = decompose(id({-1, -2, -3}), id({2}));
  CHECK(small_kuroda(oct, 1, 1, 1, 1, 2).h == 1);
  CHECK(kuroda_general(oct, 1, 1, 1, 1, 2).h == 1);
}

TEST_CASE("imaginary quadratic product and bound") {
  CHECK(P_product(id({-1, -2, -3})) == 2);
  CHECK(P_product(id({-1, 2})) == 1);
  CHECK(P_product(id({-1, -2, -3, -7})) == class_number(-1) * class_number(-2) * class_number(-3) * class_number(-6) *
                                                class_number(-7) * class_number(-14) * class_number(-21) * class_number(-42));
  CHECK(h_lower_bound(id({-1, -2, -3})) == mpq_class(1, 4));
  // Every imaginary quadratic subfield of {-1,-2,-5,-7,...} with h = 8 counts as 8; without the map it is computed.
  std::map<Int, Int> known{{-1, 1}, {-2, 1}, {-3, 1}, {-6, 2}};
  CHECK(h_lower_bound(id({-1, -2, -3}), &known) == mpq_class(1, 4));
  std::map<Int, Int> partial{{-1, 1}, {-2, 1}, {-3, 1}};
  CHECK(h_lower_bound(id({-1, -2, -3}), &partial) == 1);
}

TEST_CASE("worked example Q(sqrt-1, sqrt-2, sqrt-3) from the bundled dataset") {
  ClassNumberEngine engine(bundled());
  auto r = engine.class_number(id({-1, -2, -3}));
  CHECK(r.h == 1);
  CHECK(in(r, "P") == "2");
  CHECK(in(r, "Q(k1)") == "2");
  CHECK(in(r, "Q(k2)") == "1");
  CHECK(in(r, "q(K/k)") == "2");
  CHECK(in(r, "h3") == "1");
  CHECK(in(r, "Q") == "4");
  CHECK(in(r, "nu") == "0");
  CHECK(in(r, "k") == "2");
  CHECK(in(r, "p") == "3");
  REQUIRE(r.parts.size() == 3);
  const ClassNumberResult& k3 = r.parts[2];
  CHECK(k3.field == id({2, 3}));
  CHECK(in(k3, "q(K/k)") == "4");
  CHECK(k3.h == 1);
  CHECK_FALSE(r.datasets.empty());
  CHECK(engine.nu(id({-1, -2, -3}), id({2})) == 0);
  CHECK(engine.nu(id({-1, -2}), FieldId()) == 0);
  CHECK(engine.relative_unit_index(id({-1, -2, -3}), id({2})).q == 2);
}

TEST_CASE("class number two field") {
  ClassNumberEngine engine(bundled());
  CHECK(engine.class_number(id({-1, 2, 7})).h == 2);
  CHECK_THROWS_AS(engine.class_number(id({-5, -13, -17})), DatasetRequired);
}

TEST_CASE("biquadratic values") {
  ClassNumberEngine engine(computing());
  CHECK(engine.class_number(id({2, 3})).h == 1);
  for (const auto& l : tables::biquadratic()) CHECK_MESSAGE(engine.class_number(field_id(l)).h == 1, l.to_string());
  // Imaginary biquadratic: h = q h1 h2 h3 / 2.
  for (auto g : std::vector<std::vector<Int>>{{-1, -5}, {-3, -5}, {-7, 5}, {-11, 13}, {-23, 2}}) {
    const FieldId K = id(g);
    auto r = engine.class_number(K);
    mpz_class q(in(r, "q(K/Q)"));
    Int prod = 1;
    for (Int m : K.members()) prod *= class_number(m);
    CHECK(mpz_class(2 * r.h) == q * prod);
  }
}

TEST_CASE("base choice does not change the class number") {
  ClassNumberEngine engine(computing());
  auto set = candidates_n3();
  std::size_t checked = 0;
  for (const auto& c : set.candidates) {
    if (c.P > 4) continue;
    auto choices = all_base_choices(c.list);
    REQUIRE(!choices.empty());
    Int h = engine.class_number(c.field).h;
    for (const auto& ch : choices) CHECK_MESSAGE(engine.big_kuroda(c.field, ch).h == h, c.list.to_string() << " over " << ch.k.to_string());
    ++checked;
  }
  CHECK(checked == 18);
}

TEST_CASE("real triquadratic class number over every base") {
  ClassNumberEngine engine(computing());
  for (auto g : std::vector<std::vector<Int>>{{2, 3, 5}, {2, 5, 13}, {3, 7, 11}}) {
    const FieldId K = id(g);
    Int h = engine.class_number(K).h;
    for (const auto& k : enumerate_subfields(RadicandList(g), 1)) {
      FieldId kf = field_id(k);
      KurodaDecomposition dec = decompose(K, kf);
      dec.nu = engine.nu(K, kf);
      auto q = engine.relative_unit_index(K, kf);
      Int h1 = engine.class_number(dec.k1).h, h2 = engine.class_number(dec.k2).h, h3 = engine.class_number(dec.k3).h;
      CHECK_MESSAGE(kuroda_general(dec, h1, h2, h3, class_number(k[0]), q.q).h == h, K.to_string() << " over " << kf.to_string());
    }
  }
}

TEST_CASE("quartic candidates") {
  ClassNumberEngine engine(bundled());
  for (const auto& c : tables::candidates_n4()) CHECK_MESSAGE(engine.class_number(field_id(c.list)).h == c.h, c.list.to_string());
}
