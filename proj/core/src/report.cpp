#include "hitsieve/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "hitsieve/errors.hpp"

namespace hitsieve {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void Table::add(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw DomainError("Table::add: row width differs from header");
  rows.push_back(std::move(row));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

nlohmann::json cell(const std::string& s) {
  if (s.empty()) return s;
  std::int64_t i = 0;
  const char* end = s.data() + s.size();
  if (auto r = std::from_chars(s.data(), end, i); r.ec == std::errc() && r.ptr == end) return i;
  double d = 0;
  if (auto r = std::from_chars(s.data(), end, d); r.ec == std::errc() && r.ptr == end) return d;
  return s;
}

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + csv_field(r[i]);
    out += '\n';
  };
  line(columns);
  for (const auto& r : rows) line(r);
  return out;
}

nlohmann::json Table::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json o = nlohmann::json::object();
    for (std::size_t i = 0; i < columns.size(); ++i) o[columns[i]] = cell(r[i]);
    arr.push_back(std::move(o));
  }
  return arr;
}

nlohmann::json ExperimentResult::to_json(bool include_wall_time) const {
  nlohmann::json j;
  j["experiment"] = experiment;
  j["params"] = params;
  j["results"] = results;
  j["invariant_failures"] = invariant_failures;
  if (include_wall_time) j["wall_time_ms"] = wall_time_ms;
  return j;
}

}  // namespace hitsieve
