#include "hitsieve/charsum.hpp"

#include <cmath>

#include "hitsieve/errors.hpp"
#include "hitsieve/factor.hpp"
#include "hitsieve/primes.hpp"

namespace hitsieve {

namespace {

constexpr std::uint64_t kCharsumPrimeGuard = 1'000'000;

struct Tallies {
  std::uint64_t plus = 0, minus = 0, roots = 0;
};

Tallies tally(const QuadCoverInstance& inst, const QuadraticCharacter& chi) {
  const FpPoly g = inst.f.mod(inst.p);
  Tallies t;
  for (std::uint64_t u = 0; u < inst.p; ++u) {
    const int c = chi(g.eval(u));
    if (c > 0)
      ++t.plus;
    else if (c < 0)
      ++t.minus;
    else
      ++t.roots;
  }
  return t;
}

Deviation evaluate(const QuadCoverInstance& inst, const QuadraticCharacter& chi) {
  const Tallies t = tally(inst, chi);
  Deviation d;
  d.plus = t.plus;
  d.minus = t.minus;
  d.roots = t.roots;
  const double half = static_cast<double>(t.plus + t.minus) / 2;
  d.deviation = std::max(std::fabs(static_cast<double>(t.plus) - half), std::fabs(static_cast<double>(t.minus) - half));
  d.bound = (static_cast<double>(inst.M) - 2) * std::sqrt(static_cast<double>(inst.p)) / std::sqrt(2.0);
  d.pass = d.deviation <= d.bound;
  return d;
}

}  // namespace

QuadCoverInstance QuadCoverInstance::make(IntPoly f, std::uint64_t p, InfinityConvention convention) {
  if (p < 3 || p > kCharsumPrimeGuard || !is_prime(p)) throw DomainError("QuadCoverInstance: p must be an odd prime <= 1e6");
  if (f.degree() < 1) throw DomainError("QuadCoverInstance: deg f must be positive");
  if (mod_u64(f.lead(), p) == 0) throw DomainError("QuadCoverInstance: p divides the leading coefficient");
  if (!is_squarefree(f.mod(p))) throw DomainError("QuadCoverInstance: f is not squarefree mod p");
  QuadCoverInstance inst;
  const unsigned n = static_cast<unsigned>(f.degree());
  inst.f = std::move(f);
  inst.p = p;
  inst.convention = convention;
  inst.M = n + ((convention == InfinityConvention::Always || n % 2 == 1) ? 1 : 0);
  return inst;
}

std::uint64_t class_count(const QuadCoverInstance& inst, int c) {
  if (c != 1 && c != -1) throw DomainError("class_count: c must be +1 or -1");
  const Tallies t = tally(inst, QuadraticCharacter(inst.p));
  return c == 1 ? t.plus : t.minus;
}

std::uint64_t root_count(const QuadCoverInstance& inst) { return tally(inst, QuadraticCharacter(inst.p)).roots; }

Deviation deviation_check(const QuadCoverInstance& inst) { return evaluate(inst, QuadraticCharacter(inst.p)); }

Table CharsumScan::table() const {
  Table t;
  t.columns = {"f", "p", "deviation", "bound", "pass"};
  for (const auto& r : rows) {
    std::string f = "1";
    for (auto c : r.tail) f += ";" + std::to_string(c);
    t.add({f, std::to_string(r.p), format_double(r.d.deviation), format_double(r.d.bound), r.d.pass ? "true" : "false"});
  }
  return t;
}

nlohmann::json CharsumScan::to_json() const {
  nlohmann::json j;
  j["degrees"] = degrees;
  j["coeff_bound"] = coeff_bound;
  j["p_max"] = p_max;
  j["polynomials"] = polynomials;
  j["instances"] = instances;
  j["failures"] = failures;
  j["worst_ratio"] = worst_ratio;
  j["infinity_convention"] = "infinity is a boundary point iff deg f is odd";
  return j;
}

CharsumScan charsum_scan(const std::vector<unsigned>& degrees, std::int64_t coeff_bound, std::uint64_t p_max,
                         bool keep_rows, const Parallelism& par) {
  if (coeff_bound < 0 || coeff_bound > 50) throw RangeError("charsum_scan: coefficient bound must lie in [0, 50]");
  if (p_max > kCharsumPrimeGuard) throw RangeError("charsum_scan: p_max must be <= 1e6");
  std::vector<std::uint64_t> primes;
  if (p_max >= 3)
    for (auto p : primes_up_to(p_max))
      if (p > 2) primes.push_back(p);
  std::vector<QuadraticCharacter> chis;
  for (auto p : primes) chis.emplace_back(p);

  // Enumerate (degree, box index) jobs in a fixed order.
  std::vector<std::pair<unsigned, std::uint64_t>> ranges;  // degree, box size
  std::uint64_t total = 0;
  for (unsigned n : degrees) {
    if (n < 1 || n > 12) throw RangeError("charsum_scan: degree must lie in [1, 12]");
    std::uint64_t s = 1;
    for (unsigned i = 0; i < n; ++i) s *= static_cast<std::uint64_t>(2 * coeff_bound + 1);
    if (s > 100'000'000) throw ResourceError("charsum_scan: too many polynomials");
    ranges.emplace_back(n, s);
    total += s;
  }

  CharsumScan init;
  init.degrees = degrees;
  init.coeff_bound = coeff_bound;
  init.p_max = p_max;

  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    CharsumScan r = init;
    for (std::uint64_t g = lo; g < hi; ++g) {
      std::uint64_t idx = g;
      unsigned n = 0;
      for (const auto& [deg, size] : ranges) {
        if (idx < size) {
          n = deg;
          break;
        }
        idx -= size;
      }
      std::vector<std::int64_t> tail(n);
      for (unsigned k = n; k-- > 0;) {
        tail[k] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(2 * coeff_bound + 1)) - coeff_bound;
        idx /= static_cast<std::uint64_t>(2 * coeff_bound + 1);
      }
      const IntPoly f = IntPoly::monic_from_tail(tail);
      const i128 disc = int_poly_disc(f);
      if (disc == 0) continue;
      ++r.polynomials;
      for (std::size_t k = 0; k < primes.size(); ++k) {
        if (mod_u64(disc, primes[k]) == 0) continue;
        QuadCoverInstance inst;
        inst.f = f;
        inst.p = primes[k];
        inst.M = n + (n % 2);
        const Deviation d = evaluate(inst, chis[k]);
        ++r.instances;
        if (d.bound > 0) r.worst_ratio = std::max(r.worst_ratio, d.deviation / d.bound);
        if (!d.pass) ++r.failures;
        if (keep_rows || !d.pass) r.rows.push_back({tail, primes[k], d});
      }
    }
    return r;
  };
  auto merge = [](CharsumScan a, const CharsumScan& b) {
    a.polynomials += b.polynomials;
    a.instances += b.instances;
    a.failures += b.failures;
    a.worst_ratio = std::max(a.worst_ratio, b.worst_ratio);
    a.rows.insert(a.rows.end(), b.rows.begin(), b.rows.end());
    return a;
  };
  return shard_and_merge<CharsumScan>(total, par, init, work, merge);
}

}  // namespace hitsieve
