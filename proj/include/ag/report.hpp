#pragma once

#include <string>

#include "json.hpp"

namespace ag {

using Json = nlohmann::ordered_json;

/// Deterministic plain-text rendering of a report object: one "key: value"
/// line per scalar, dotted paths for nested objects, comma-joined scalar
/// arrays, indexed paths for object arrays.
std::string render_report_text(const Json& report);

}  // namespace ag
