#include "runner.hpp"

#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hitsieve/errors.hpp"

namespace hitsieve::runner {

namespace {

std::int64_t parse_int(const std::string& key, const std::string& s) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) throw DomainError("parameter " + key + ": not an integer: '" + s + "'");
  return v;
}

double parse_double(const std::string& key, const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v))
    throw DomainError("parameter " + key + ": not a number: '" + s + "'");
  return v;
}

nlohmann::json convert(const ParamSpec& ps, const std::string& s) {
  switch (ps.kind) {
    case ParamKind::Int: return parse_int(ps.name, s);
    case ParamKind::Double: return parse_double(ps.name, s);
    case ParamKind::String: return s;
    case ParamKind::IntList: {
      std::vector<std::int64_t> out;
      std::stringstream ss(s);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_int(ps.name, item));
      return out;
    }
  }
  return nullptr;
}

}  // namespace

const ExperimentSpec* find_experiment(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return &s;
  return nullptr;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

nlohmann::json typed_params(const ExperimentSpec& spec, const std::map<std::string, std::string>& raw) {
  for (const auto& [k, v] : raw) {
    const bool known = std::any_of(spec.params.begin(), spec.params.end(), [&](const ParamSpec& p) { return p.name == k; });
    if (!known) throw DomainError("unknown parameter '" + k + "' for " + spec.name);
  }
  nlohmann::json out = nlohmann::json::object();
  for (const auto& ps : spec.params) {
    const auto it = raw.find(ps.name);
    out[ps.name] = convert(ps, it == raw.end() ? ps.default_value : it->second);
  }
  return out;
}

std::string canonical_csv(const Table& t) {
  Table sorted = t;
  std::sort(sorted.rows.begin(), sorted.rows.end());
  return sorted.to_csv();
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  const auto* spec = find_experiment(cfg.experiment);
  if (!spec) throw DomainError("unknown experiment '" + cfg.experiment + "'");
  const auto params = typed_params(*spec, cfg.raw_params);
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentResult r = spec->fn(params, cfg.seed, cfg.par);
  r.experiment = spec->name;
  r.params = params;
  r.params["seed"] = cfg.seed;
  if (cfg.self_test) {
    const ExperimentResult one = spec->fn(params, cfg.seed, Parallelism{cfg.par.threads, 1});
    const ExperimentResult eight = spec->fn(params, cfg.seed, Parallelism{cfg.par.threads, 8});
    const bool same = one.results == eight.results && canonical_csv(one.table) == canonical_csv(eight.table) &&
                      one.results == r.results && canonical_csv(one.table) == canonical_csv(r.table);
    r.results["self_test"] = same ? "identical on 1 and 8 shards" : "shard outputs differ";
    if (!same) r.invariant_failures.push_back("self-test: outputs differ between shard counts");
  }
  r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

namespace {

void write_outputs(const ExperimentConfig& cfg, const ExperimentResult& r, std::ostream& out) {
  const auto summary = r.to_json(true).dump(2);
  if (cfg.out_dir.empty()) {
    if (cfg.format == "csv")
      out << r.table.to_csv();
    else
      out << summary << '\n';
    return;
  }
  std::filesystem::create_directories(cfg.out_dir);
  const auto base = std::filesystem::path(cfg.out_dir) / r.experiment;
  if (cfg.format != "json") {
    std::ofstream f(base.string() + ".csv", std::ios::binary);
    f << r.table.to_csv();
  }
  if (cfg.format != "csv") {
    std::ofstream f(base.string() + ".json", std::ios::binary);
    f << summary << '\n';
  }
  out << r.experiment << ": " << (r.invariant_failures.empty() ? "ok" : "invariant failures") << ", wrote "
      << base.string() << (cfg.format == "both" ? ".{csv,json}" : "." + cfg.format) << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"hitsieve experiment runner"};
  app.name("hitsieve");
  app.set_config("--config", "", "TOML file whose keys mirror the flags; flags win");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);
  app.fallthrough();

  ExperimentConfig cfg;
  app.add_option("--threads", cfg.par.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--shards", cfg.par.shards, "shard count (0: four per thread)");
  app.add_option("--seed", cfg.seed, "global seed");
  app.add_option("--out", cfg.out_dir, "output directory");
  app.add_option("--format", cfg.format, "csv | json | both")->check(CLI::IsMember({"csv", "json", "both"}));
  app.add_flag("--self-test", cfg.self_test, "rerun on 1 and 8 shards and compare");

  std::map<std::string, std::map<std::string, std::string>> raw;
  std::map<std::string, std::vector<CLI::Option*>> opts;
  for (const auto& spec : registry()) {
    auto* sub = app.add_subcommand(spec.name, spec.description);
    for (const auto& ps : spec.params) {
      auto* o = sub->add_option("--" + ps.name, raw[spec.name][ps.name], ps.help + " (default " +
                                                                             (ps.default_value.empty() ? "none" : ps.default_value) + ")");
      opts[spec.name].push_back(o);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto* chosen = app.get_subcommands().front();
  cfg.experiment = chosen->get_name();
  for (auto* o : opts[cfg.experiment])
    if (o->count() > 0) {
      const std::string key = o->get_name().substr(2);  // strip "--"
      cfg.raw_params[key] = raw[cfg.experiment][key];
    }

  try {
    const auto r = run_experiment(cfg);
    write_outputs(cfg, r, out);
    for (const auto& f : r.invariant_failures) err << "invariant failure: " << f << '\n';
    return r.invariant_failures.empty() ? kExitOk : kExitInvariant;
  } catch (const ResourceError& e) {
    err << "resource guard: " << e.what() << '\n';
    return kExitResource;
  } catch (const OverflowError& e) {
    err << "overflow guard: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hitsieve::runner
