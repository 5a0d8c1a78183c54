#pragma once

#include "geonf/series.hpp"

#include <json.hpp>

#include <string>

namespace geonf {

using Json = nlohmann::ordered_json;

// {"order": N, "vars": "...", "entries": [[j, k, re, im], ...]}; zero coefficients are omitted.
Json to_json(const BiSeries& s, const std::string& vars = "zw");
Json to_json(const UniSeries& s, const std::string& vars = "z");

// Both accept numbers or decimal strings for re/im.  Throws std::invalid_argument on malformed input.
BiSeries bi_series_from_json(const Json& j);
UniSeries uni_series_from_json(const Json& j);

Complex complex_from_json(const Json& re, const Json& im);
Real real_from_json(const Json& v);

}  // namespace geonf
