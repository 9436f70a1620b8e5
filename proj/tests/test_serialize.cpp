#include "doctest.h"
#include "multiquad/errors.hpp"
#include "multiquad/serialize.hpp"

using namespace multiquad;

namespace {

FieldId id(std::vector<Int> gens) { return field_id(RadicandList(std::move(gens))); }

}  // namespace

TEST_CASE("field strings") {
  CHECK(field_from_string("-1,2") == id({-1, 2}));
  CHECK(field_from_string("-1,-2,2") == id({-1, 2}));
  CHECK(field_from_string("").degree_exponent() == 0);
}

TEST_CASE("element round trip") {
  auto K = MultiquadField::get(RadicandList({-1, -2, -3}));
  auto x = MQElement::parse(K, "1/4*sqrt(6) - 1/4*sqrt(2) - sqrt(-1) + 1/4*sqrt(-6) - 3/4*sqrt(-2) + 1/2*sqrt(-3) - 1/2");
  Json j = to_json(x);
  CHECK(j["field"] == "-1,-2,2,-3,3,-6,6");
  CHECK(j["coords"]["1"] == "-1/2");
  CHECK(j["coords"]["-2"] == "-3/4");
  CHECK_FALSE(j["coords"].contains("3"));
  CHECK(element_from_json(j) == x);
  CHECK(element_from_json(Json::parse(j.dump())) == x);
  CHECK_THROWS_AS(element_from_json(Json{{"field", "-1"}}), DomainError);
  CHECK_THROWS_AS(element_from_json(Json{{"field", "-1"}, {"coords", {{"5", "1"}}}}), DomainError);
}

TEST_CASE("quadratic unit") {
  Json j = to_json(fundamental_unit(209));
  CHECK(j["x"] == "46551");
  CHECK(j["y"] == "3220");
  CHECK(j["norm"] == 1);
}

TEST_CASE("class number result round trip") {
  UnitProvider p({MULTIQUAD_TEST_DATA_DIR, false});
  ClassNumberEngine engine(p);
  auto r = engine.class_number(id({-1, -2, -3}));
  Json j = to_json(r);
  CHECK(j["h"] == 1);
  CHECK(j["inputs"]["q(K/k)"] == "2");
  CHECK(j["inputs"]["P"] == "2");
  auto back = class_number_result_from_json(Json::parse(j.dump()));
  CHECK(back.h == r.h);
  CHECK(back.field == r.field);
  CHECK(back.inputs == r.inputs);
  CHECK(back.unit_witnesses == r.unit_witnesses);
  CHECK(back.datasets == r.datasets);
  REQUIRE(back.parts.size() == r.parts.size());
  CHECK(to_json(back).dump() == j.dump());
  CHECK_THROWS_AS(class_number_result_from_json(Json{{"h", 1}}), DomainError);
}

TEST_CASE("reports are deterministic") {
  UnitProvider p({MULTIQUAD_TEST_DATA_DIR, false});
  ClassNumberEngine engine(p);
  ClassifierOptions one, four;
  four.jobs = 4;
  auto a = to_json(classify_n3(engine, candidates_n3(), one)).dump();
  auto b = to_json(classify_n3(engine, candidates_n3(), four)).dump();
  CHECK(a == b);
  Json d = to_json(discriminant_of(RadicandList({-1, 5})));
  CHECK(d["delta"] == "400");
  CHECK(d["e"] == 2);
  Json s = to_json(candidates_n3());
  CHECK(s["candidates"].size() == 62);
}
