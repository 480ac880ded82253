#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "hitsieve/heights.hpp"

namespace hitsieve {

using PrimeSet = std::set<std::uint64_t>;

// Occupancy g_p is keyed by prime; J = the key set.
struct SieveInstance {
  std::variant<std::monostate, std::vector<ProjPoint>, std::vector<IntPoint>> points;
  double B = 1;
  std::map<std::uint64_t, double> occupancy;
  unsigned d = 1;
  PrimeSet excluded;

  // Throws RangeError/DomainError on a broken invariant: B < 1, d == 0, g_p <= 0,
  // non-prime or excluded key, or a point over budget.
  void validate() const;
};

// Occupancy measured exactly on the instance's own points over the given primes.
SieveInstance measured_instance(std::vector<ProjPoint> points, double B, const std::vector<std::uint64_t>& primes,
                                unsigned d = 1);
SieveInstance measured_instance(std::vector<IntPoint> points, double B, const std::vector<std::uint64_t>& primes,
                                unsigned d = 1);

struct SieveResult {
  double numerator = 0;
  double denominator = 0;
  std::optional<double> value;  // empty = Inconclusive

  bool inconclusive() const { return !value.has_value(); }
};

// (sum log p - d log(2B^2)) / (sum log p / g_p - d log(2B^2)) over p in J.
SieveResult sieve_bound_proj(const SieveInstance& inst);
// Same with d log B in place of d log(2B^2).
SieveResult sieve_bound_int(const SieveInstance& inst);

// Report record {formula, inputs, value, inconclusive}.
nlohmann::json sieve_report(const SieveInstance& inst, const SieveResult& r, bool integral);

inline constexpr double kCutoffCeiling = 1e9;

// Smallest x in the doubling sequence 2, 4, 8, ... with
//   sum_{p not in S, D^2 <= p <= x} log p / (delta (p + D sqrt p)) - d log B >= 1.
// Throws RangeError on bad inputs, ResourceError past kCutoffCeiling.
double auto_cutoff(double delta, double D, const PrimeSet& S, double B, unsigned d);

// Instance with J = {p not in S, D^2 <= p <= x} and g_p = delta (p + D sqrt p).
SieveInstance cutoff_instance(double delta, double D, const PrimeSet& S, double B, unsigned d, double x);

// D^2 exp(sum_{p in S, p >= D^2} log p / p) B^{d delta}. Shape-only: implicit constant set to 1.
double specialized_bound(double delta, double D, const PrimeSet& S, double B, unsigned d);

struct CoverBoundInput {
  std::uint64_t gg_order = 1;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> kappa_data;  // (|kappa|, |C_kappa|)
  PrimeSet S;
  unsigned n = 1;
  unsigned d = 1;
  double B = 2;
};

struct HitBound {
  double delta = 0;
  double c = 0;
  double bound = 0;      // c B^{d(n-1+delta)} log B; shape-only
  double log_bound = 0;  // natural log of bound, finite even when bound overflows
};

HitBound hit_bound(const CoverBoundInput& in);

}  // namespace hitsieve
