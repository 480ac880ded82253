#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "runner.hpp"

using namespace hitsieve;
using namespace hitsieve::runner;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hitsieve");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json summary(const std::vector<std::string>& args) {
  auto r = cli(args);
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  j.erase("wall_time_ms");
  return j;
}

// Minimal RFC 4180 field splitter for one line.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        out.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.emplace_back();
    } else {
      out.back() += ch;
    }
  }
  return out;
}

std::filesystem::path temp_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("hitsieve_test_" + name);
  std::filesystem::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("registry lists every experiment") {
  for (const char* name : {"sieve-demo", "vdw-census", "disc-square", "gl2-verify", "group-indices", "ec-census",
                           "dynamics", "charsum", "bound-calc"})
    CHECK(find_experiment(name) != nullptr);
  CHECK(find_experiment("nope") == nullptr);
}

TEST_CASE("vdw-census counts sum to the box") {
  const auto dir = temp_dir("vdw");
  const auto r = cli({"vdw-census", "--n", "3", "--B", "12", "--seed", "1", "--out", dir.string()});
  REQUIRE(r.code == 0);
  std::ifstream csv(dir / "vdw-census.csv");
  std::string line;
  std::getline(csv, line);
  CHECK(line == "n,B,label,count,bound_shape,ratio,seed,budget");
  std::uint64_t total = 0;
  while (std::getline(csv, line)) {
    const auto fields = split_csv(line);
    REQUIRE(fields.size() == 8);
    if (fields[2].rfind("E_n_", 0) != 0) total += std::stoull(fields[3]);
  }
  CHECK(total == 25ull * 25 * 25);
  const auto j = nlohmann::json::parse(std::ifstream(dir / "vdw-census.json"));
  for (const char* k : {"experiment", "params", "results", "invariant_failures", "wall_time_ms"}) CHECK(j.contains(k));
  CHECK(j["params"]["seed"] == 1);
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"no-such-experiment"}).code == kExitUsage);
  CHECK(cli({"vdw-census", "--bogus", "1"}).code == kExitUsage);
  CHECK(cli({"vdw-census", "--n", "x"}).code == kExitUsage);
  CHECK(cli({"vdw-census", "--n", "9", "--B", "20"}).code == kExitResource);
  CHECK(cli({"--help"}).code == kExitOk);
  CHECK(cli({"gl2-verify", "--lmax", "13", "--formula_lmax", "13"}).code == kExitOk);
}

TEST_CASE("invariant violations never exit 0") {
  // Degree 2 fails the odd-degree boundary convention; the scan reports it as a violation.
  const auto r = cli({"charsum", "--degrees", "2", "--C", "1", "--pmax", "20"});
  CHECK(r.code == kExitInvariant);
  CHECK(r.err.find("invariant failure") != std::string::npos);
}

TEST_CASE("determinism across thread and shard counts") {
  const auto a = summary({"vdw-census", "--n", "3", "--B", "8", "--seed", "5", "--format", "json"});
  const auto b = summary({"vdw-census", "--n", "3", "--B", "8", "--seed", "5", "--threads", "4", "--shards", "13",
                          "--format", "json"});
  CHECK(a == b);
  const auto c = summary({"ec-census", "--B", "15", "--budget", "300", "--format", "json"});
  const auto d = summary({"ec-census", "--B", "15", "--budget", "300", "--threads", "3", "--format", "json"});
  CHECK(c == d);
  const auto e = summary({"sieve-demo", "--set", "random", "--B", "1000", "--seed", "9", "--format", "json"});
  const auto f = summary({"sieve-demo", "--set", "random", "--B", "1000", "--seed", "9", "--format", "json"});
  CHECK(e == f);
  const auto g = summary({"sieve-demo", "--set", "random", "--B", "1000", "--seed", "10", "--format", "json"});
  CHECK(e["results"] != g["results"]);
}

TEST_CASE("self-test compares 1 and 8 shards") {
  const auto j = summary({"vdw-census", "--n", "3", "--B", "20", "--self-test", "--format", "json"});
  CHECK(j["results"]["self_test"] == "identical on 1 and 8 shards");
  CHECK(j["invariant_failures"].empty());
}

TEST_CASE("config file with flag override and unknown keys") {
  const auto dir = temp_dir("cfg");
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "run.toml");
    f << "seed = 3\n[vdw-census]\nn = 2\nB = 7\n";
  }
  auto j = summary({"--config", (dir / "run.toml").string(), "vdw-census", "--format", "json"});
  CHECK(j["params"]["n"] == 2);
  CHECK(j["params"]["B"] == 7);
  CHECK(j["params"]["seed"] == 3);
  j = summary({"--config", (dir / "run.toml").string(), "vdw-census", "--B", "4", "--format", "json"});
  CHECK(j["params"]["B"] == 4);
  {
    std::ofstream f(dir / "bad.toml");
    f << "[vdw-census]\nwidth = 2\n";
  }
  CHECK(cli({"--config", (dir / "bad.toml").string(), "vdw-census"}).code == kExitUsage);
}

TEST_CASE("bound-calc hand evaluation") {
  const auto j = summary({"bound-calc", "--gg", "6", "--kappa", "1:6", "--S", "2,3", "--n", "2", "--B", "1000",
                          "--d", "1", "--format", "json"});
  CHECK(j["results"]["delta"] == 1.0);
  CHECK(j["results"]["c"].get<double>() == doctest::Approx(36));
  CHECK(j["results"]["bound"].get<double>() == doctest::Approx(36 * 1e6 * std::log(1000.0)));
}

TEST_CASE("typed params reject unknown keys and echo defaults") {
  const auto* spec = find_experiment("dynamics");
  REQUIRE(spec);
  CHECK_THROWS(typed_params(*spec, {{"nope", "1"}}));
  const auto p = typed_params(*spec, {{"x", "1000"}});
  CHECK(p["x"] == 1000);
  CHECK(p["coeffs"] == std::vector<std::int64_t>{1, 0, 1});
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) == derive_seed(1, 0));
}

TEST_CASE("CLI binary smoke test") {
  const auto dir = temp_dir("bin");
  const std::string cmd = std::string(HITSIEVE_CLI_PATH) + " group-indices --out " + dir.string() + " > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  const auto j = nlohmann::json::parse(std::ifstream(dir / "group-indices.json"));
  CHECK(j["results"]["level8"]["index_in_gl2"] == 48);
}
