#include "hitsieve/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include <gmpxx.h>

#include "hitsieve/errors.hpp"
#include "hitsieve/primes.hpp"

namespace hitsieve {

PolyMap::PolyMap(IntPoly f) : phi(std::move(f)) {
  if (phi.degree() < 2) throw DomainError("PolyMap: degree must be at least 2");
}

std::uint64_t PolyMap::eval_mod(std::uint64_t x, std::uint64_t p) const {
  u128 acc = 0;
  const auto& c = phi.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x + mod_u64(*it, p)) % p;
  return static_cast<std::uint64_t>(acc);
}

OrbitRecord orbit_mod_p(const PolyMap& f, std::int64_t P, std::uint64_t p) {
  if (p < 2 || p > kOrbitPrimeGuard || !is_prime(p)) throw DomainError("orbit_mod_p: p must be a prime <= 1e9");
  const std::uint64_t x0 = mod_u64(static_cast<i128>(P), p);
  // Brent: cycle length lam.
  std::uint64_t power = 1, lam = 1;
  std::uint64_t tortoise = x0, hare = f.eval_mod(x0, p);
  while (tortoise != hare) {
    if (power == lam) {
      tortoise = hare;
      power *= 2;
      lam = 0;
    }
    hare = f.eval_mod(hare, p);
    ++lam;
  }
  // Tail length mu: walk two pointers lam apart.
  std::uint64_t mu = 0;
  tortoise = hare = x0;
  for (std::uint64_t i = 0; i < lam; ++i) hare = f.eval_mod(hare, p);
  while (tortoise != hare) {
    tortoise = f.eval_mod(tortoise, p);
    hare = f.eval_mod(hare, p);
    ++mu;
  }
  return {p, mu, lam, mu + lam};
}

namespace {

struct Tally {
  std::vector<std::uint64_t> primes{0, 0, 0}, passing{0, 0, 0};
  std::uint64_t power_passing = 0;
  std::vector<DensityRow> rows;
};

}  // namespace

DensityProfile density_profile(const PolyMap& f, std::int64_t P, std::uint64_t x, double eps, bool keep_rows,
                               const Parallelism& par) {
  if (x < 2 || x > kDensityGuard) throw RangeError("density_profile: x must lie in [2, 1e7]");
  if (!(eps > 0) || eps >= 1.0 / std::log(static_cast<double>(f.degree())))
    throw DomainError("density_profile: eps must lie in (0, 1/log d)");
  const auto primes = primes_up_to(x);
  const std::uint64_t marks[3] = {std::max<std::uint64_t>(x / 100, 1), std::max<std::uint64_t>(x / 10, 1), x};

  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    Tally t;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::uint64_t p = primes[i];
      DensityRow row;
      row.orbit = orbit_mod_p(f, P, p);
      row.threshold = eps * std::log(static_cast<double>(p));
      row.pass = static_cast<double>(row.orbit.m_p) >= row.threshold;
      row.power_pass = static_cast<double>(row.orbit.m_p) >= std::pow(static_cast<double>(p), 0.25);
      for (int k = 0; k < 3; ++k)
        if (p <= marks[k]) {
          ++t.primes[k];
          t.passing[k] += row.pass;
        }
      t.power_passing += row.power_pass;
      if (keep_rows) t.rows.push_back(row);
    }
    return t;
  };
  auto merge = [](Tally a, Tally b) {
    for (int k = 0; k < 3; ++k) {
      a.primes[k] += b.primes[k];
      a.passing[k] += b.passing[k];
    }
    a.power_passing += b.power_passing;
    a.rows.insert(a.rows.end(), b.rows.begin(), b.rows.end());
    return a;
  };
  const Tally t = shard_and_merge<Tally>(primes.size(), par, Tally{}, work, merge);

  DensityProfile out;
  out.x = x;
  out.eps = eps;
  for (int k = 0; k < 3; ++k) {
    DensityCheckpoint c{marks[k], t.primes[k], t.passing[k], 0};
    c.fraction = c.primes ? static_cast<double>(c.passing) / static_cast<double>(c.primes) : 1.0;
    out.checkpoints.push_back(c);
  }
  out.fraction = out.checkpoints.back().fraction;
  out.power_fraction = primes.empty() ? 1.0 : static_cast<double>(t.power_passing) / static_cast<double>(primes.size());
  out.rows = t.rows;
  return out;
}

Table DensityProfile::table() const {
  Table t;
  t.columns = {"p", "tail", "cycle", "m_p", "threshold", "pass"};
  for (const auto& r : rows)
    t.add({std::to_string(r.orbit.p), std::to_string(r.orbit.tail), std::to_string(r.orbit.cycle),
           std::to_string(r.orbit.m_p), format_double(r.threshold), r.pass ? "true" : "false"});
  return t;
}

nlohmann::json DensityProfile::to_json() const {
  nlohmann::json j;
  j["x"] = x;
  j["eps"] = eps;
  j["finite_x_density"] = fraction;
  j["exploratory_power_quarter_fraction"] = power_fraction;
  auto& cps = j["checkpoints"] = nlohmann::json::array();
  for (const auto& c : checkpoints)
    cps.push_back({{"x", c.x}, {"primes", c.primes}, {"passing", c.passing}, {"finite_x_density", c.fraction}});
  return j;
}

namespace {

mpz_class eval_big(const IntPoly& f, const mpz_class& x) {
  mpz_class acc = 0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    // i128 coefficients are bounded by 2^62 in IntPoly inputs built from int64.
    const i128 v = *it;
    const u128 m = abs_u128(v);
    mpz_class cm = static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64));
    cm <<= 64;
    cm += mpz_class(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
    if (v < 0) cm = -cm;
    acc += cm;
  }
  return acc;
}

// log max(|v|, 1).
double height(const mpz_class& v) {
  if (v == 0) return 0;
  long e = 0;
  const double m = mpz_get_d_2exp(&e, v.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

}  // namespace

HeightGrowth height_growth_check(const PolyMap& f, std::int64_t P, unsigned iters) {
  if (iters > kMaxHeightIters) throw RangeError("height_growth_check: iters must be <= 20");
  const unsigned d = f.degree();
  const std::uint64_t coeff_bits = static_cast<std::uint64_t>(std::log2(static_cast<double>(f.phi.max_norm()) + 1)) + 8;

  std::vector<mpz_class> orbit{mpz_class(static_cast<long>(P))};
  for (unsigned i = 0; i < iters; ++i) {
    const std::uint64_t bits = mpz_sizeinbase(orbit.back().get_mpz_t(), 2);
    if (d * bits + coeff_bits > kHeightBitBudget) throw ResourceError("height_growth_check: orbit value exceeds the bit budget");
    orbit.push_back(eval_big(f.phi, orbit.back()));
  }

  HeightGrowth out;
  for (const auto& v : orbit) out.heights.push_back(height(v));

  // c = 0 works iff |phi^i(P)| <= H(P)^(d^i) for every i; decided with exact integers.
  const mpz_class H0 = std::max<mpz_class>(abs(orbit[0]), 1);
  bool zero_ok = true;
  mpz_class bound = H0;  // H0^(d^i)
  for (unsigned i = 1; i <= iters && zero_ok; ++i) {
    if (H0 == 1) {
      zero_ok = abs(orbit[i]) <= 1;
      continue;
    }
    // Past the budget the bound dominates every materialised orbit value.
    if (mpz_sizeinbase(bound.get_mpz_t(), 2) * d > 2 * kHeightBitBudget) break;
    mpz_pow_ui(bound.get_mpz_t(), bound.get_mpz_t(), d);
    zero_ok = abs(orbit[i]) <= bound;
  }
  if (zero_ok) return out;

  double c = 0;
  double scale = 1;
  for (unsigned i = 1; i <= iters; ++i) {
    scale *= d;
    c = std::max(c, out.heights[i] / scale - out.heights[0]);
  }
  out.c = c;
  return out;
}

}  // namespace hitsieve
