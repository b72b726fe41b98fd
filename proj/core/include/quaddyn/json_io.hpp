#pragma once

#include "quaddyn/catalog.hpp"
#include "quaddyn/checks.hpp"
#include "quaddyn/curves.hpp"
#include "quaddyn/modp.hpp"
#include "quaddyn/orbit.hpp"
#include "quaddyn/portrait.hpp"
#include "quaddyn/quadfield.hpp"
#include "quaddyn/scan.hpp"

#include <nlohmann/json.hpp>

namespace quaddyn {

using Json = nlohmann::ordered_json;

// {"d": int, "a": "p/q", "b": "p/q"}
Json to_json(const QuadElem& x);
QuadElem quad_from_json(const nlohmann::json& j);

// {"n": int, "succ": [int], "label": string?}
Json to_json(const Portrait& p);
Portrait portrait_from_json(const nlohmann::json& j);

Json to_json(const CatalogEntry& e);
CatalogEntry catalog_entry_from_json(const nlohmann::json& j);

Json to_json(const PortraitResult& r);
Json to_json(const ScanReport& r);
Json to_json(const CheckRow& r);
Json to_json(const DensityReport& r);
Json to_json(const QuadraticPointRecord& r);

}  // namespace quaddyn
