#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace dyckmax {

using Json = nlohmann::ordered_json;

/// One command's result. `rows` is the tabular part shared by CSV and JSON;
/// `summary` carries per-invocation aggregates and appears in JSON only.
struct OutputRecord {
  std::string command;
  Json params = Json::object();
  std::vector<Json> rows;  // flat objects with identical key order
  Json summary = Json::object();
  Json metadata = Json::object();

  Json to_json() const;
  /// Header from the first row's keys, one line per row, RFC 4180 quoting.
  std::string to_csv() const;
};

/// JSON cell for a double; non-finite values become "inf", "-inf" or "nan".
Json real_cell(double v);

/// The text a cell occupies in CSV. Numbers use the shortest representation
/// that round-trips, matching the JSON encoding.
std::string cell_text(const Json& cell);

inline constexpr const char* kSchemaVersion = "1";

}  // namespace dyckmax
