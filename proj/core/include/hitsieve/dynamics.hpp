#pragma once

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "hitsieve/int_poly.hpp"
#include "hitsieve/report.hpp"
#include "hitsieve/shard.hpp"

namespace hitsieve {

inline constexpr std::uint64_t kOrbitPrimeGuard = 1'000'000'000;
inline constexpr std::uint64_t kDensityGuard = 10'000'000;
inline constexpr unsigned kMaxHeightIters = 20;
// Largest orbit value, in bits, that height_growth_check will materialise.
inline constexpr std::uint64_t kHeightBitBudget = 1ull << 27;

// Polynomial self-map of the affine line, degree >= 2.
struct PolyMap {
  IntPoly phi;

  // Throws DomainError when deg phi < 2.
  explicit PolyMap(IntPoly f);
  unsigned degree() const { return static_cast<unsigned>(phi.degree()); }
  std::uint64_t eval_mod(std::uint64_t x, std::uint64_t p) const;
};

// m_p = tail + cycle, cycle >= 1, m_p <= p.
struct OrbitRecord {
  std::uint64_t p = 0;
  std::uint64_t tail = 0;
  std::uint64_t cycle = 0;
  std::uint64_t m_p = 0;
  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

// Forward orbit of P mod p by Brent cycle detection. p prime <= 1e9.
OrbitRecord orbit_mod_p(const PolyMap& f, std::int64_t P, std::uint64_t p);

struct DensityRow {
  OrbitRecord orbit;
  double threshold = 0;  // eps log p
  bool pass = false;     // m_p >= eps log p
  bool power_pass = false;  // exploratory: m_p >= p^(1/4)
};

struct DensityCheckpoint {
  std::uint64_t x = 0;
  std::uint64_t primes = 0;
  std::uint64_t passing = 0;
  double fraction = 0;
};

struct DensityProfile {
  std::uint64_t x = 0;
  double eps = 0;
  double fraction = 0;  // finite-x density at x
  double power_fraction = 0;
  std::vector<DensityCheckpoint> checkpoints;  // x/100, x/10, x
  std::vector<DensityRow> rows;                // empty unless requested

  // Rows p,tail,cycle,m_p,threshold,pass.
  Table table() const;
  nlohmann::json to_json() const;
};

// Fraction of primes p <= x with m_p >= eps log p. Needs 0 < eps < 1/log d and
// 2 <= x <= 1e7; DomainError / RangeError otherwise.
DensityProfile density_profile(const PolyMap& f, std::int64_t P, std::uint64_t x, double eps,
                               bool keep_rows = false, const Parallelism& par = {});

struct HeightGrowth {
  double c = 0;                  // minimal c >= 0; exactly 0 when the c = 0 inequality holds exactly
  std::vector<double> heights;   // h(phi^i(P)), i = 0..iters
};

// Minimal c with h(phi^i P) <= d^i (h(P) + c) for i <= iters, exact big integers.
// iters <= 20 (RangeError); ResourceError when an orbit value would exceed the bit budget.
HeightGrowth height_growth_check(const PolyMap& f, std::int64_t P, unsigned iters);

}  // namespace hitsieve
