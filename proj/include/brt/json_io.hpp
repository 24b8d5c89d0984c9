#ifndef BRT_JSON_IO_HPP
#define BRT_JSON_IO_HPP

#include <json.hpp>  // vendored nlohmann/json single header

#include "brt/scenario.hpp"

namespace brt {

using json = nlohmann::json;

// All serializers produce canonical JSON: nlohmann::json objects with
// alphabetically sorted keys, integers for ids, exact scalars as strings for
// rationals. dump(2) of these values is byte-stable.

json fincategory_to_json(const FinCategory& c);
FinCategory fincategory_from_json(const json& j);

json presheaf_to_json(const Presheaf& a);
Presheaf presheaf_from_json(const json& j, const FinCategoryPtr& base);

json presheaf_morphism_to_json(const PresheafMorphism& u);  // components only

// DescentShape files embed the base category and all four presheaves; this is
// the primary CLI input format.
json shape_to_json(const DescentShape& s);
DescentShape shape_from_json(const json& j);

json coeff_object_to_json(const CoeffObject& x);
CoeffObject coeff_object_from_json(const json& j);
json coeff_morphism_to_json(const CoeffMorphism& f);
CoeffMorphism coeff_morphism_from_json(const json& j);

json representation_to_json(const Representation& m);  // keyed by ∫A object labels
json rep_morphism_to_json(const RepMorphism& f);

json scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const json& j);

// Canonical verdict serialization: excludes wall-clock timing so that verdicts
// are byte-identical across runs with equal (scenario, seed, budget).
json verdict_to_json(const Verdict& v);

}  // namespace brt

#endif
