#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "hitsieve/int_poly.hpp"
#include "hitsieve/report.hpp"
#include "hitsieve/shard.hpp"

namespace hitsieve {

// Whether infinity counts as a boundary point of the double cover y^2 = f(x).
enum class InfinityConvention {
  OddDegreeOnly,  // ramified at infinity exactly when deg f is odd
  Always,         // infinity is never in U(F_p)
};

struct QuadCoverInstance {
  IntPoly f;
  std::uint64_t p = 0;
  unsigned M = 0;  // deg f geometric roots, plus infinity per the convention
  InfinityConvention convention = InfinityConvention::OddDegreeOnly;

  // Throws DomainError unless p is an odd prime, deg f >= 1, p does not divide
  // the leading coefficient and f mod p is squarefree.
  static QuadCoverInstance make(IntPoly f, std::uint64_t p,
                                InfinityConvention convention = InfinityConvention::OddDegreeOnly);
};

// #{u in F_p : f(u) != 0, (f(u)/p) = c}, c = +1 or -1 (DomainError otherwise).
std::uint64_t class_count(const QuadCoverInstance& inst, int c);
// Number of roots of f in F_p.
std::uint64_t root_count(const QuadCoverInstance& inst);

struct Deviation {
  std::uint64_t plus = 0, minus = 0, roots = 0;
  double deviation = 0;  // max over c of |class_count(c) - |U(F_p)|/2|
  double bound = 0;      // (M - 2) sqrt(p) / sqrt 2
  bool pass = false;
};

Deviation deviation_check(const QuadCoverInstance& inst);

struct CharsumScan {
  std::vector<unsigned> degrees;
  std::int64_t coeff_bound = 0;
  std::uint64_t p_max = 0;
  std::uint64_t polynomials = 0;  // squarefree over Q
  std::uint64_t instances = 0;    // (f, p) pairs checked
  std::uint64_t failures = 0;
  double worst_ratio = 0;  // max deviation / bound
  struct Row {
    std::vector<std::int64_t> tail;  // f = x^n + tail[0] x^(n-1) + ...
    std::uint64_t p = 0;
    Deviation d;
  };
  std::vector<Row> rows;  // failures always; every instance when requested

  // Columns f,p,deviation,bound,pass.
  Table table() const;
  nlohmann::json to_json() const;
};

// Every monic f of the given degrees with lower coefficients in [-C, C] and
// nonzero discriminant, against every odd prime p <= p_max not dividing disc f.
CharsumScan charsum_scan(const std::vector<unsigned>& degrees, std::int64_t coeff_bound, std::uint64_t p_max,
                         bool keep_rows = false, const Parallelism& par = {});

}  // namespace hitsieve
