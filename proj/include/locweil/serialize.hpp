#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "locweil/log_value.hpp"
#include "locweil/nullstellensatz.hpp"
#include "locweil/presentation.hpp"
#include "locweil/weil.hpp"

namespace locweil {

using Json = nlohmann::ordered_json;

// LogValue: {"exact": {"<prime>": "<rational>"}, "arch": "<decimal>", "total": <number>}.
// The exact map round-trips bit for bit; the archimedean part to the printed digits.
Json to_json(const LogValue& v);
LogValue log_value_from_json(const Json& j, int precision_bits = kDefaultPrecision);

// {"n", "field", "divisor": {"numerator", "denominator"}, "deg_L", "s", "deg_M", "t",
//  "generation_status": {"s", "t"}}, forms written in x0..xn.
Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

// {"variables", "pairs": [{"f", "g"}], "degree_bound", "sizes": {"<place>": LogValue}}.
// Sizes are reported at infinity and at every prime appearing in a coefficient of some g.
Json to_json(const Certificate& c, const std::vector<std::string>& variables, int precision_bits = kDefaultPrecision);
Certificate certificate_from_json(const Json& j);

Json to_json(const ProjectivePoint& x);
ProjectivePoint point_from_json(const Json& j);

/// Reads a file and parses it as JSON, raising ParseError on malformed input.
Json read_json_file(const std::string& path);

}  // namespace locweil
