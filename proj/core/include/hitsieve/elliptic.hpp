#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hitsieve/gl2_serre.hpp"
#include "hitsieve/int_poly.hpp"
#include "hitsieve/primes.hpp"
#include "hitsieve/report.hpp"
#include "hitsieve/shard.hpp"

namespace hitsieve {

inline constexpr std::uint64_t kPointCountGuard = 1'000'000;
inline constexpr std::int64_t kFamilyGuard = 10'000;
inline constexpr std::uint32_t kMinCensusEll = 5;
inline constexpr std::uint32_t kMaxCensusEll = 37;

// y^2 = x^3 + a x + b with 4a^3 + 27b^2 != 0.
struct CurveQ {
  std::int64_t a = 0;
  std::int64_t b = 0;

  // Throws DomainError on a singular model.
  static CurveQ make(std::int64_t a, std::int64_t b);
  // 4a^3 + 27b^2; the curve discriminant is -16 times this.
  i128 disc_core() const;
  std::string to_string() const;
};

struct FrobData {
  std::uint64_t p = 0;
  std::int64_t a_p = 0;
};

// a_p = -sum_u chi(u^3 + a u + b). Needs p prime, p not dividing 6 disc, p <= 1e6.
// chi may be supplied to reuse a precomputed table for p.
FrobData point_count_mod_p(const CurveQ& E, std::uint64_t p, const QuadraticCharacter* chi = nullptr);
// #E(F_p) including infinity, by counting square roots of each right-hand side.
std::uint64_t point_count_enumerate(const CurveQ& E, std::uint64_t p);

// Classifies (a_p mod ell, p mod ell). Needs ell >= 5 prime, p not dividing ell * disc.
SerreClass frobenius_serre_class(const CurveQ& E, std::uint64_t p, std::uint32_t ell);

struct SurjectivityCertificate {
  bool certified = false;
  std::array<std::optional<std::uint64_t>, 3> witness;  // first p hitting C_1, C_2, C_3
  std::uint64_t primes_scanned = 0;

  // Indices 1..3 of the classes never hit.
  std::vector<int> gaps() const;
};

// Scans primes 5 <= p <= prime_bound with p not dividing 6 ell disc.
SurjectivityCertificate certify_surjective(const CurveQ& E, std::uint32_t ell, std::uint64_t prime_bound);

// a(t), b(t) in one parameter.
struct FamilySpec {
  std::string name;
  IntPoly a;
  IntPoly b;

  // Throws DomainError when 4a(t)^3 + 27b(t)^2 vanishes identically.
  void validate() const;
  // nullopt when t lies in the excluded set (singular fibre).
  std::optional<CurveQ> fibre(std::int64_t t) const;
};

// y^2 = x(x-1)(x-t) moved to short form by completing the cube and scaling by 3:
// a = -27(t^2 - t + 1), b = -27(t + 1)(2t - 1)(t - 2). Isomorphic away from 2 and 3.
FamilySpec legendre_family();

struct EllCount {
  std::uint64_t certified = 0;
  std::uint64_t uncertified = 0;
  std::uint64_t excluded = 0;
};

struct EllipticCensusReport {
  std::string family;
  std::int64_t B = 0;
  std::uint64_t prime_budget = 0;
  std::map<std::uint32_t, EllCount> per_ell;
  std::map<std::uint32_t, std::vector<std::int64_t>> uncertified_t;
  double wall_time_ms = 0;

  EllipticCensusReport& merge(const EllipticCensusReport& o);
  // Rows family,ell,B,budget,certified,uncertified,excluded,bound_shape.
  Table table() const;
  nlohmann::json to_json() const;
};

// Shape-only bound ell^6 sqrt(B) log B.
double elliptic_bound_shape(std::uint32_t ell, std::int64_t B);

// t ranges over [-B, B]; ells in [5, 37] prime; B <= 1e4.
EllipticCensusReport family_census(const FamilySpec& fam, std::int64_t B, const std::vector<std::uint32_t>& ells,
                                   std::uint64_t prime_budget, const Parallelism& par = {});

}  // namespace hitsieve
