#pragma once

#include <string>

#include <json.hpp>

// Output records for the CLI: JSON lines or CSV with identical numeric
// content. Records keep insertion order, so emitted JSON re-serializes to
// the same bytes after a parse round trip.

namespace latwalk::io {

using Record = nlohmann::ordered_json;

// One JSON line, newline terminated.
std::string json_line(const Record& rec);

// CSV header / row for a flattened record (nested keys joined with '.').
// Scalar cells reuse the JSON serialization of each value, so both formats
// carry the same numeric text; strings are emitted raw (quoted only when a
// delimiter forces it).
std::string csv_header(const Record& rec);
std::string csv_row(const Record& rec);

}  // namespace latwalk::io
