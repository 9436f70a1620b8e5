#include <complex>
#include <random>

#include "doctest.h"
#include "multiquad/errors.hpp"
#include "multiquad/field.hpp"

using namespace multiquad;
using cplx = std::complex<double>;

namespace {

MultiquadField::Ptr F(std::vector<Int> gens) { return MultiquadField::get(RadicandList(std::move(gens))); }

/// Value at the identity embedding with principal square roots.
cplx eval(const MQElement& x) {
  cplx out = x.coefficient_of(1).get_d();
  for (Int m : x.field()->id().members()) out += x.coefficient_of(m).get_d() * std::sqrt(cplx(static_cast<double>(m)));
  return out;
}

MQElement random_element(const MultiquadField::Ptr& f, std::mt19937_64& rng) {
  std::vector<std::pair<Int, mpq_class>> coords{{1, mpq_class(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3)}};
  for (Int m : f->id().members()) {
    mpq_class q(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
    q.canonicalize();
    coords.emplace_back(m, q);
  }
  coords.front().second.canonicalize();
  return MQElement::from_coords(f, coords);
}

}  // namespace

TEST_CASE("products of square roots") {
  auto f = F({2, -3});
  auto s2 = MQElement::sqrt_member(f, 2);
  CHECK(s2 * s2 == MQElement(f, 2));
  CHECK(s2 * MQElement::sqrt_member(f, -3) == MQElement::sqrt_member(f, -6));
  auto z = MQElement::parse(F({-1, 2}), "1/2*sqrt(2) + 1/2*sqrt(-2)");
  CHECK(z.pow(8) == MQElement(z.field(), 1));
  CHECK(z.pow(4) == MQElement(z.field(), -1));
  CHECK(root_of_unity_order(z) == 8);
  CHECK_THROWS_AS(MQElement::parse(f, "sqrt(5)"), DomainError);
}

TEST_CASE("arithmetic agrees with complex evaluation") {
  std::mt19937_64 rng(7);
  for (auto gens : std::vector<std::vector<Int>>{{-1}, {2, 3}, {-1, -2, -3}, {-3, 5, -7}, {-1, 2, 3, 5}}) {
    auto f = F(gens);
    for (int trial = 0; trial < 40; ++trial) {
      MQElement x = random_element(f, rng), y = random_element(f, rng);
      CHECK(std::abs(eval(x * y) - eval(x) * eval(y)) < 1e-9 * (1 + std::abs(eval(x) * eval(y))));
      CHECK(std::abs(eval(x + y) - (eval(x) + eval(y))) < 1e-9 * (1 + std::abs(eval(x) + eval(y))));
      if (!x.is_zero()) {
        CHECK(x * x.inverse() == MQElement(f, 1));
        CHECK((x * y) / x == y);
      }
      CHECK((x * y).norm() == x.norm() * y.norm());
      CHECK((x * y).galois(1) == x.galois(1) * y.galois(1));
      CHECK(x.pow(3) == x * x * x);
    }
  }
  CHECK_THROWS_AS(MQElement(F({2}), 0).inverse(), DomainError);
}

TEST_CASE("embeddings") {
  auto f = F({2});
  auto e = MQElement::sqrt_member(f, 2).embeddings(128);
  REQUIRE(e.size() == 2);
  CHECK(std::abs(std::abs(e[0].re.mid()) - std::sqrt(2.0)) < 1e-12);
  CHECK(e[0].re.mid() * e[1].re.mid() < 0);
  for (const auto& v : MQElement(F({-1, 2}), 1).embeddings(128)) {
    CHECK(v.re.mid() == doctest::Approx(1.0));
    CHECK(v.im.contains_zero());
  }
  auto g = F({209});
  auto eps = MQElement::parse(g, "46551 + 3220*sqrt(209)").embeddings(256);
  double hi = std::max(eps[0].re.mid(), eps[1].re.mid());
  CHECK(hi == doctest::Approx(46551 + 3220 * std::sqrt(209.0)).epsilon(1e-12));
  CHECK(hi > 93101.99998);
  CHECK(hi < 93102.0);
}

TEST_CASE("norms") {
  CHECK(MQElement::parse(F({2}), "1 + sqrt(2)").norm() == -1);
  CHECK(MQElement::parse(F({3}), "2 + sqrt(3)").norm() == 1);
  CHECK(MQElement::parse(F({6}), "5 + 2*sqrt(6)").norm() == 1);
  auto k3 = F({2, 3});
  auto x = MQElement::parse(k3, "1 + sqrt(2) + sqrt(3)");
  auto rel = x.relative_norm(field_id(RadicandList({2})));
  CHECK(rel.restrict_to(F({2})).norm() == x.norm());
}

TEST_CASE("exact square roots") {
  auto k3 = F({2, 3});
  auto r = MQElement::parse(k3, "2 + sqrt(3)").sqrt();
  REQUIRE(r);
  auto expected = MQElement::parse(k3, "1/2*sqrt(2) + 1/2*sqrt(6)");
  CHECK((*r == expected || *r == -expected));
  CHECK_FALSE(MQElement(F({3}), 2).sqrt());
  auto prod = MQElement::parse(k3, "1 + sqrt(2)") * MQElement::parse(k3, "2 + sqrt(3)") *
              MQElement::parse(k3, "5 + 2*sqrt(6)");
  CHECK_FALSE(prod.sqrt());
  std::mt19937_64 rng(11);
  auto f = F({-1, 2, -3});
  for (int i = 0; i < 30; ++i) {
    MQElement x = random_element(f, rng);
    if (x.is_zero()) continue;
    auto s = (x * x).sqrt();
    REQUIRE(s);
    CHECK((*s == x || *s == -x));
  }
}

TEST_CASE("integrality") {
  CHECK(MQElement::parse(F({5}), "1/2 + 1/2*sqrt(5)").is_integral());
  CHECK_FALSE(MQElement::parse(F({2}), "1/2 + 1/2*sqrt(2)").is_integral());
  CHECK(MQElement::parse(F({2, 3}), "1/2*sqrt(2) + 1/2*sqrt(6)").is_integral());
}

TEST_CASE("roots of unity") {
  auto t = torsion_units(F({-1, 2}));
  CHECK(t.order == 8);
  CHECK(root_of_unity_order(t.generator) == 8);
  CHECK(torsion_units(F({-3, 2})).order == 6);
  auto big = torsion_units(F({-1, -2, -3}));
  CHECK(big.order == 24);
  CHECK(root_of_unity_order(big.generator) == 24);
  CHECK(torsion_units(F({2, 3})).order == 2);
  CHECK(torsion_units(F({-1})).order == 4);
}

TEST_CASE("lift and restrict") {
  auto small = F({2});
  auto big = F({-1, 2, 3});
  auto x = MQElement::parse(small, "1 + sqrt(2)");
  auto y = x.lift(big);
  CHECK(y.coefficient_of(2) == 1);
  CHECK(y.restrict_to(small) == x);
  CHECK_THROWS_AS(MQElement::sqrt_member(big, 3).restrict_to(small), DomainError);
}
