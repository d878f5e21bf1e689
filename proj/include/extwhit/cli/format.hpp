#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace extwhit::cli {

// %.17g.
std::string format_double(double v);

// Compact JSON with keys in byte order, integers as integers and every other
// number as %.17g. Parsing the output and serialising again gives the same
// bytes.
std::string canonical_json(const nlohmann::json& j);

// One CSV record: ',' separated, '\n' terminated; fields containing ',', '"'
// or a newline are quoted.
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace extwhit::cli
