#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hitsieve {

// Shortest round-trip decimal for a double ("%.17g" trimmed); stable across runs.
std::string format_double(double v);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
  // RFC 4180: fields containing a comma, quote or newline are quoted.
  std::string to_csv() const;
  // Array of objects keyed by column; cells that parse fully as numbers become numbers.
  nlohmann::json to_json() const;
};

// Envelope {experiment, params, results, invariant_failures, wall_time_ms}.
struct ExperimentResult {
  std::string experiment;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> invariant_failures;
  double wall_time_ms = 0;
  Table table;

  nlohmann::json to_json(bool include_wall_time = true) const;
};

}  // namespace hitsieve
