#include "multiquad/serialize.hpp"

#include "multiquad/errors.hpp"

namespace multiquad {

namespace {

Json string_list(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

Json int_list(std::span<const Int> v) {
  Json out = Json::array();
  for (Int a : v) out.push_back(a);
  return out;
}

}  // namespace

FieldId field_from_string(const std::string& s) {
  if (s.empty()) return FieldId();
  return field_id(RadicandList::parse(s));
}

Json to_json(const MQElement& x) {
  const FieldId& id = x.field()->id();
  Json coords = Json::object();
  std::vector<Int> order{1};
  for (Int m : id.members()) order.push_back(m);
  for (Int m : order) {
    const mpq_class& q = x.coefficient_of(m);
    if (sgn(q) != 0) coords[std::to_string(m)] = q.get_str();
  }
  return Json{{"field", id.to_string()}, {"coords", coords}};
}

MQElement element_from_json(const Json& j) {
  try {
    auto field = MultiquadField::get(field_from_string(j.at("field").get<std::string>()));
    std::vector<std::pair<Int, mpq_class>> coords;
    for (const auto& [k, v] : j.at("coords").items()) {
      mpq_class q(v.get<std::string>());
      q.canonicalize();
      coords.emplace_back(std::stoll(k), q);
    }
    return MQElement::from_coords(field, coords);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed element: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw DomainError(std::string("malformed element: ") + e.what());
  }
}

Json to_json(const QuadUnit& u) {
  return Json{{"a", u.a}, {"x", u.x.get_str()}, {"y", u.y.get_str()}, {"w", u.w}, {"norm", u.norm()}, {"unit", u.to_string()}};
}

Json to_json(const DiscriminantData& d) {
  return Json{{"e", d.e}, {"odd_primes", int_list(d.odd_primes)}, {"delta", d.delta.get_str()}};
}

Json to_json(const InertiaData& d) {
  return Json{{"p", d.p}, {"ram_index", d.ram_index}, {"inertia_field", int_list(d.generators)}};
}

Json to_json(const UnitSystem& s) {
  Json units = Json::array();
  for (const auto& u : s.fundamental) units.push_back(to_json(u)["coords"]);
  Json out{{"field", s.field.to_string()},
           {"torsion_order", s.torsion.order},
           {"torsion_generator", to_json(s.torsion.generator)["coords"]},
           {"fundamental_units", units},
           {"source", s.source == UnitSystem::Source::dataset ? "dataset" : "computed"},
           {"certified", s.certified}};
  if (!s.origin.empty()) out["origin"] = s.origin;
  return out;
}

Json to_json(const IndexResult& r) {
  return Json{{"q", r.q.get_str()},
              {"free_index", r.free_index.get_str()},
              {"torsion_index", r.torsion_index},
              {"witnesses", string_list(r.witnesses)}};
}

Json to_json(const ClassNumberResult& r) {
  Json inputs = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  Json parts = Json::array();
  for (const auto& p : r.parts) parts.push_back(to_json(p));
  return Json{{"field", r.field.to_string()}, {"h", r.h},
              {"formula", r.formula},         {"inputs", inputs},
              {"units", string_list(r.unit_witnesses)}, {"datasets", string_list(r.datasets)},
              {"parts", parts}};
}

ClassNumberResult class_number_result_from_json(const Json& j) {
  ClassNumberResult r;
  try {
    r.field = field_from_string(j.at("field").get<std::string>());
    r.h = j.at("h").get<Int>();
    r.formula = j.at("formula").get<std::string>();
    for (const auto& [k, v] : j.at("inputs").items()) r.inputs.emplace_back(k, v.get<std::string>());
    r.unit_witnesses = j.at("units").get<std::vector<std::string>>();
    r.datasets = j.at("datasets").get<std::vector<std::string>>();
    for (const auto& p : j.at("parts")) r.parts.push_back(class_number_result_from_json(p));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed class number result: ") + e.what());
  }
  return r;
}

Json to_json(const Candidate& c) {
  return Json{{"field", c.field.to_string()},
              {"list", c.list.to_string()},
              {"P", c.P},
              {"imaginary_h", int_list(c.imaginary_h)},
              {"label", c.label}};
}

Json to_json(const CandidateSet& s) {
  Json cands = Json::array();
  for (const auto& c : s.candidates) cands.push_back(to_json(c));
  return Json{{"n", s.n}, {"candidates", cands}, {"audit", string_list(s.audit)}};
}

Json to_json(const Evaluation& e) {
  Json out{{"candidate", to_json(e.candidate)}, {"status", to_string(e.status)}, {"witness", e.witness}};
  out["h"] = e.h ? Json(*e.h) : Json(nullptr);
  if (e.trace) out["trace"] = to_json(*e.trace);
  return out;
}

Json to_json(const StageReport& r) {
  Json fields = Json::array();
  for (const auto& f : r.class_number_one) fields.push_back(display_list(f).to_string());
  Json evals = Json::array();
  for (const auto& e : r.evaluations) evals.push_back(to_json(e));
  return Json{{"n", r.n},
              {"class_number_one", fields},
              {"matches_table", r.matches_table},
              {"audit", string_list(r.audit)},
              {"discrepancies", string_list(r.discrepancies)},
              {"evaluations", evals}};
}

Json to_json(const ClassificationReport& r) {
  Json stages = Json::array();
  for (const auto& s : r.stages) stages.push_back(to_json(s));
  return Json{{"matches_tables", r.matches_tables}, {"discrepancies", string_list(r.discrepancies)}, {"stages", stages}};
}

}  // namespace multiquad
