#pragma once

// JSON forms of the library's results. Key order is fixed, so equal inputs
// give byte-identical output.

#include "json.hpp"
#include "multiquad/classifier.hpp"
#include "multiquad/field.hpp"
#include "multiquad/kuroda.hpp"
#include "multiquad/quadratic.hpp"
#include "multiquad/ramification.hpp"
#include "multiquad/units.hpp"

namespace multiquad {

using Json = nlohmann::ordered_json;

/// {"field": "-1,-2,2", "coords": {"1": "1/2", "-1": "1/2"}}; members in canonical order, rational part "1" first.
Json to_json(const MQElement& x);
MQElement element_from_json(const Json& j);

Json to_json(const QuadUnit& u);
Json to_json(const DiscriminantData& d);
Json to_json(const InertiaData& d);
Json to_json(const UnitSystem& s);
Json to_json(const IndexResult& r);

/// {field, h, formula, inputs: {...}, units: [...], datasets: [...], parts: [...]}
Json to_json(const ClassNumberResult& r);
ClassNumberResult class_number_result_from_json(const Json& j);

Json to_json(const Candidate& c);
Json to_json(const CandidateSet& s);
Json to_json(const Evaluation& e);
Json to_json(const StageReport& r);
Json to_json(const ClassificationReport& r);

/// "-1,2,3" <-> FieldId via field_id; empty string for Q.
FieldId field_from_string(const std::string& s);

}  // namespace multiquad
