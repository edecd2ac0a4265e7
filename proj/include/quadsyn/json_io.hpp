#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "quadsyn/pipeline.hpp"

namespace quadsyn {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Point& p);
Json to_json(const Extensor& e);
Json to_json(const Trace& t);
Json to_json(const Certificate& c);
/// trace_ref is the path the trace was written to, or null.
Json to_json(const Decision& d, const std::string& trace_ref = {});
Json config_to_json(const Config& pts);

/// All parsers throw GeometryError(Parse) on malformed input.
Rational rational_from_json(const Json& j);
Point point_from_json(const Json& j);
Extensor extensor_from_json(const Json& j);
Trace trace_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);
/// {"points": [ten points]}.
Config config_from_json(const Json& j);

Json parse_json_text(std::string_view text);
std::string dump(const Json& j, bool pretty);

}  // namespace quadsyn
