#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hitsieve/galois.hpp"
#include "hitsieve/report.hpp"
#include "hitsieve/shard.hpp"

namespace hitsieve {

inline constexpr std::uint64_t kBoxGuard = 1'000'000'000ULL;

enum class CensusMode { Exact, Certificate };

const char* to_string(CensusMode mode);

// (2B+1)^n; ResourceError above 1e9, RangeError for n == 0 or B < 0.
std::uint64_t box_size(unsigned n, std::int64_t B);
// Mixed-radix decoding of index into t in [-B, B]^n, t_1 most significant.
std::vector<std::int64_t> box_point(unsigned n, std::int64_t B, std::uint64_t index);

struct CensusReport {
  unsigned n = 0;
  std::int64_t B = 0;
  CensusMode mode = CensusMode::Exact;
  unsigned prime_budget = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> counts;    // GaloisLabel::to_string() -> count
  std::map<std::string, std::uint64_t> subtypes;  // group name -> count, where known
  double wall_time_ms = 0;

  std::uint64_t total() const;
  std::uint64_t tag_count(GaloisTag tag) const;
  // Certified non-S_n count, and that plus Undetermined.
  std::uint64_t e_n_lower() const;
  std::uint64_t e_n_upper() const;

  // Fieldwise addition; parameters must agree.
  CensusReport& merge(const CensusReport& other);

  // Rows n,B,label,count,bound_shape,ratio,seed,budget.
  Table table() const;
  nlohmann::json to_json() const;
};

// Shape-only bound used for ratio columns: 2B log B for n = 2, B^(n-1/2) otherwise.
double e_n_shape(unsigned n, std::int64_t B);
std::string e_n_shape_name(unsigned n);

// Exact mode needs 2 <= n <= 4; certificate mode any n >= 2.
CensusReport count_census(unsigned n, std::int64_t B, CensusMode mode, unsigned prime_budget, std::uint64_t seed,
                          const Parallelism& par = {});
// The same over box indices [lo, hi) only.
CensusReport count_census_range(unsigned n, std::int64_t B, CensusMode mode, unsigned prime_budget,
                                std::uint64_t seed, std::uint64_t lo, std::uint64_t hi);

GaloisLabel classify_point(const std::vector<std::int64_t>& t, CensusMode mode, unsigned prime_budget,
                           std::uint64_t seed);

// #{t : f(x,t) has an irreducible factor of degree i}, 1 <= i <= n/2.
std::uint64_t count_reducible_by_degree(unsigned n, std::int64_t B, unsigned i, const Parallelism& par = {});
// #{t : disc f(x,t) is a perfect square, 0 included}.
std::uint64_t count_disc_square(unsigned n, std::int64_t B, const Parallelism& par = {});

}  // namespace hitsieve
