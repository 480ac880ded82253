#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hitsieve/groups.hpp"

namespace hitsieve {

inline constexpr std::uint32_t kMaxBruteEll = 31;

struct SerreClass {
  bool in_C1 = false;  // tr != 0, tr^2 - 4 det a nonzero square
  bool in_C2 = false;  // tr != 0, tr^2 - 4 det a non-square
  bool in_C3 = false;  // u = tr^2/det not in {0,1,2,4} and u^2 - 3u + 1 != 0
  friend bool operator==(const SerreClass&, const SerreClass&) = default;
};

// Classification depends only on (trace, det). ell >= 5 prime, det != 0.
SerreClass classify_trace_det(std::uint32_t t, std::uint32_t d, std::uint32_t ell);
// Throws DomainError if A is singular or A.m is not a prime >= 5.
SerreClass classify(const Mat2& A);

// #{A in GL_2(F_ell) : det A = d, tr A = t} by enumeration; 5 <= ell <= 31.
std::uint64_t count_fixed_trace_det(std::uint32_t ell, std::uint32_t d, std::uint32_t t);
// ell^2 + (t^2 - 4d / ell) ell.
std::uint64_t count_fixed_trace_det_formula(std::uint32_t ell, std::uint32_t d, std::uint32_t t);

enum class CountPath { Auto, Brute, Formula };

// |{A in C_i : det A = d}| / (ell (ell^2 - 1)). Auto uses enumeration up to ell = 31.
Rational class_proportion(std::uint32_t ell, std::uint32_t d, int i, CountPath path = CountPath::Auto);

struct GeneratedSubgroup {
  std::uint64_t order = 0;
  std::uint64_t det_one = 0;
  bool meets[3] = {false, false, false};
  bool contains_sl2 = false;

  bool meets_all() const { return meets[0] && meets[1] && meets[2]; }
};

// Closure inside GL_2(F_ell) with a dense bitmap. ell <= 31, else ResourceError.
GeneratedSubgroup scan_generated(const std::vector<Mat2>& gens, std::uint32_t ell);
bool contains_sl2(const std::vector<Mat2>& gens, std::uint32_t ell);

// 1 to 3 generators drawn from GL_2, a Borel, a split Cartan normalizer or a
// nonsplit Cartan normalizer, so that proper subgroups occur often.
std::vector<Mat2> random_serre_generators(std::uint32_t ell, std::mt19937_64& rng);

}  // namespace hitsieve
