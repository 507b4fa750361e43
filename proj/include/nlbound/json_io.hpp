#pragma once

// JSON surfaces: box and chain files, report objects, and the canonical
// serialization used for byte-exact output (sorted keys, no whitespace,
// doubles as %.17g, non-finite doubles as null).

#include <string>

#include <json.hpp>

#include "nlbound/box.hpp"
#include "nlbound/deform.hpp"
#include "nlbound/semiring.hpp"
#include "nlbound/wiring.hpp"

namespace nlbound {

using Json = nlohmann::json;

std::string canonical_dump(const Json& j);

Json box_to_json(const BehaviorBox& box);
/// Expects {"p": [16 numbers]}; throws ValidationError otherwise.
BehaviorBox box_from_json(const Json& j);

/// Expects {"stages": [box, ...]} with at least one stage.
WiringChain chain_from_json(const Json& j);

Json chsh_report_json(const BehaviorBox& box);
Json locality_report_json(const LocalityReport& r);
Json audit_json(const AbsorptionReport& r);
Json combine_json(const CombineResult& r);
Json solve_json(const SolveResult& r);
Json label_to_json(const ModelLabel& label);
ModelLabel label_from_json(const Json& j);

/// Parses text; syntax errors become ValidationError.
Json parse_json_text(const std::string& text);

}  // namespace nlbound
