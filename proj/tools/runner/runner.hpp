#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hitsieve/report.hpp"
#include "hitsieve/shard.hpp"

namespace hitsieve::runner {

enum class ParamKind { Int, Double, String, IntList };

struct ParamSpec {
  std::string name;
  ParamKind kind;
  std::string default_value;
  std::string help;
};

using ExperimentFn = std::function<ExperimentResult(const nlohmann::json& params, std::uint64_t seed,
                                                    const Parallelism& par)>;

struct ExperimentSpec {
  std::string name;
  std::string description;
  std::vector<ParamSpec> params;
  ExperimentFn fn;
};

const std::vector<ExperimentSpec>& registry();
const ExperimentSpec* find_experiment(const std::string& name);

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvariant = 2;
inline constexpr int kExitResource = 3;

struct ExperimentConfig {
  std::string experiment;
  std::map<std::string, std::string> raw_params;  // unset keys take the spec default
  std::uint64_t seed = 0;
  Parallelism par;
  std::string out_dir;          // empty: summary JSON on stdout only
  std::string format = "both";  // csv | json | both
  bool self_test = false;
};

// Converts raw strings to typed params; throws DomainError on unknown keys or bad values.
nlohmann::json typed_params(const ExperimentSpec& spec, const std::map<std::string, std::string>& raw);

// Runs one experiment. With self_test the run is repeated on 1 and 8 shards and
// any difference after canonical sorting is recorded as an invariant failure.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Independent seed for stream k (splitmix64 of seed and k).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// CSV with the header kept first and data rows sorted.
std::string canonical_csv(const Table& t);

// Full command line front end; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hitsieve::runner
