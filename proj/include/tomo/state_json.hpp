#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "tomo/state.hpp"

namespace tomo {

using ParsedState = std::variant<State, ProductState>;

/// Parses the JSON state document: {"family": "...", "params": {...}},
/// {"family": "sampled", "grid": {...}, "re": [...], "im": [...]},
/// {"family": "mixed", "components": [...]}, {"family": "product",
/// "modes": [...]}.
ParsedState parse_state_json(const nlohmann::json& doc);

/// Accepts inline JSON (leading '{'), "@path" to a JSON file, or the
/// shorthand family[:key=value,...] (e.g. "soliton:lz=2", "waist:sigma=2",
/// "squeezed:r=0.6", "thermal:beta=1", "gauss:qq=1,pp=1,qp=0").
ParsedState parse_state_spec(const std::string& spec);

}  // namespace tomo
