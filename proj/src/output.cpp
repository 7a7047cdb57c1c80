#include "dyckmax/output.hpp"

#include <cmath>
#include <stdexcept>

namespace dyckmax {

Json real_cell(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

std::string cell_text(const Json& cell) {
  if (cell.is_null()) return "";
  if (cell.is_string()) return cell.get<std::string>();
  return cell.dump();
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json OutputRecord::to_json() const {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["params"] = params;
  j["rows"] = Json::array();
  for (const auto& r : rows) j["rows"].push_back(r);
  j["summary"] = summary;
  j["metadata"] = metadata;
  return j;
}

std::string OutputRecord::to_csv() const {
  if (rows.empty()) return "";
  std::vector<std::string> keys;
  for (const auto& [k, v] : rows.front().items()) keys.push_back(k);
  std::string out;
  for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "," : "") + csv_field(keys[i]);
  out += '\n';
  for (const auto& row : rows) {
    if (row.size() != keys.size()) throw std::logic_error("CSV rows must share one set of columns");
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (!row.contains(keys[i])) throw std::logic_error("CSV row is missing column " + keys[i]);
      out += (i ? "," : "") + csv_field(cell_text(row.at(keys[i])));
    }
    out += '\n';
  }
  return out;
}

}  // namespace dyckmax
