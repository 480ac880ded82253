#include "hitsieve/sieve_bounds.hpp"

#include <cmath>

#include "hitsieve/errors.hpp"
#include "hitsieve/primes.hpp"

namespace hitsieve {

namespace {

double log_sum_over(const PrimeSet& S, double floor_p) {
  double s = 0;
  for (auto p : S)
    if (static_cast<double>(p) >= floor_p) s += std::log(static_cast<double>(p)) / static_cast<double>(p);
  return s;
}

SieveResult evaluate(const SieveInstance& inst, double penalty) {
  if (inst.occupancy.empty()) throw DomainError("sieve bound: empty occupancy");
  inst.validate();
  SieveResult r;
  double mass = 0;
  double weighted = 0;
  for (const auto& [p, g] : inst.occupancy) {
    const double lp = std::log(static_cast<double>(p));
    mass += lp;
    weighted += lp / g;
  }
  r.numerator = mass - penalty;
  r.denominator = weighted - penalty;
  if (r.denominator > 0) r.value = r.numerator / r.denominator;
  return r;
}

template <class Pt>
SieveInstance measured(std::vector<Pt> pts, double B, const std::vector<std::uint64_t>& primes, unsigned d) {
  SieveInstance inst;
  inst.B = B;
  inst.d = d;
  for (auto p : primes) {
    const auto g = measure_occupancy(pts, p);
    inst.occupancy[p] = static_cast<double>(std::max<std::uint64_t>(g, 1));
  }
  inst.points = std::move(pts);
  inst.validate();
  return inst;
}

}  // namespace

void SieveInstance::validate() const {
  if (!(B >= 1)) throw RangeError("SieveInstance: B must be >= 1");
  if (d == 0) throw RangeError("SieveInstance: d must be positive");
  for (const auto& [p, g] : occupancy) {
    if (!is_prime(p)) throw DomainError("SieveInstance: occupancy key is not prime");
    if (excluded.count(p)) throw DomainError("SieveInstance: occupancy key is excluded");
    if (!(g > 0)) throw RangeError("SieveInstance: g_p must be positive");
  }
  if (const auto* pp = std::get_if<std::vector<ProjPoint>>(&points)) {
    for (const auto& P : *pp)
      if (static_cast<double>(proj_height(P)) > B) throw RangeError("SieveInstance: point height exceeds B");
  } else if (const auto* ip = std::get_if<std::vector<IntPoint>>(&points)) {
    // max ||P - Q|| equals the largest coordinate spread.
    if (!ip->empty()) {
      const std::size_t n = ip->front().coords.size();
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t lo = ip->front().coords[i], hi = lo;
        for (const auto& P : *ip) {
          if (P.coords.size() != n) throw DomainError("SieveInstance: mixed dimensions");
          lo = std::min(lo, P.coords[i]);
          hi = std::max(hi, P.coords[i]);
        }
        if (static_cast<double>(static_cast<i128>(hi) - lo) > B)
          throw RangeError("SieveInstance: point spread exceeds B");
      }
    }
  }
}

SieveInstance measured_instance(std::vector<ProjPoint> points, double B, const std::vector<std::uint64_t>& primes,
                                unsigned d) {
  return measured(std::move(points), B, primes, d);
}

SieveInstance measured_instance(std::vector<IntPoint> points, double B, const std::vector<std::uint64_t>& primes,
                                unsigned d) {
  return measured(std::move(points), B, primes, d);
}

SieveResult sieve_bound_proj(const SieveInstance& inst) {
  return evaluate(inst, inst.d * std::log(2.0 * inst.B * inst.B));
}

SieveResult sieve_bound_int(const SieveInstance& inst) { return evaluate(inst, inst.d * std::log(inst.B)); }

nlohmann::json sieve_report(const SieveInstance& inst, const SieveResult& r, bool integral) {
  nlohmann::json occ = nlohmann::json::object();
  for (const auto& [p, g] : inst.occupancy) occ[std::to_string(p)] = g;
  nlohmann::json j;
  j["formula"] = integral ? "(sum log p - d log B) / (sum log p / g_p - d log B)"
                          : "(sum log p - d log(2B^2)) / (sum log p / g_p - d log(2B^2))";
  j["inputs"] = {{"B", inst.B},
                 {"d", inst.d},
                 {"occupancy", occ},
                 {"excluded", std::vector<std::uint64_t>(inst.excluded.begin(), inst.excluded.end())},
                 {"numerator", r.numerator},
                 {"denominator", r.denominator}};
  j["value"] = r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr);
  j["inconclusive"] = r.inconclusive();
  return j;
}

double auto_cutoff(double delta, double D, const PrimeSet& S, double B, unsigned d) {
  if (!(delta > 0 && delta <= 1)) throw RangeError("auto_cutoff: delta must lie in (0,1]");
  if (!(D >= 1)) throw RangeError("auto_cutoff: D must be >= 1");
  if (!(B >= 1)) throw RangeError("auto_cutoff: B must be >= 1");
  if (d == 0) throw RangeError("auto_cutoff: d must be positive");
  const double target = 1.0 + d * std::log(B);
  const auto floor_p = static_cast<std::uint64_t>(std::ceil(D * D));
  double sum = 0;
  std::uint64_t done = 1;  // primes <= done already summed
  for (double x = 2; x <= kCutoffCeiling; x *= 2) {
    const auto hi = static_cast<std::uint64_t>(x);
    for_each_prime(std::max<std::uint64_t>(done + 1, 2), hi, [&](std::uint64_t p) {
      if (p < floor_p || S.count(p)) return;
      const double pd = static_cast<double>(p);
      sum += std::log(pd) / (delta * (pd + D * std::sqrt(pd)));
    });
    done = hi;
    if (sum >= target) return x;
  }
  throw ResourceError("auto_cutoff: ceiling 1e9 reached");
}

SieveInstance cutoff_instance(double delta, double D, const PrimeSet& S, double B, unsigned d, double x) {
  SieveInstance inst;
  inst.B = B;
  inst.d = d;
  const auto floor_p = static_cast<std::uint64_t>(std::ceil(D * D));
  for_each_prime(std::max<std::uint64_t>(floor_p, 2), static_cast<std::uint64_t>(x), [&](std::uint64_t p) {
    if (S.count(p)) return;
    const double pd = static_cast<double>(p);
    inst.occupancy[p] = delta * (pd + D * std::sqrt(pd));
  });
  return inst;
}

double specialized_bound(double delta, double D, const PrimeSet& S, double B, unsigned d) {
  if (!(delta > 0 && delta <= 1)) throw RangeError("specialized_bound: delta must lie in (0,1]");
  if (!(D >= 1)) throw RangeError("specialized_bound: D must be >= 1");
  return D * D * std::exp(log_sum_over(S, D * D)) * std::pow(B, d * delta);
}

HitBound hit_bound(const CoverBoundInput& in) {
  if (!(in.B >= 2)) throw RangeError("hit_bound: B must be >= 2");
  if (in.gg_order == 0) throw DomainError("hit_bound: |G^g| must be >= 1");
  if (in.kappa_data.empty()) throw DomainError("hit_bound: no conjugacy classes");
  HitBound h;
  for (const auto& [kappa, ck] : in.kappa_data) {
    if (kappa == 0) throw DomainError("hit_bound: empty class");
    if (static_cast<u128>(ck) > static_cast<u128>(kappa) * in.gg_order)
      throw DomainError("hit_bound: |C_kappa| exceeds |kappa| |G^g|");
    h.delta = std::max(h.delta, static_cast<double>(ck) / (static_cast<double>(kappa) * in.gg_order));
  }
  const double g = static_cast<double>(in.gg_order);
  const double log_c = 2 * std::log(g) + log_sum_over(in.S, g * g);
  h.c = std::exp(log_c);
  const double exponent = in.d * (static_cast<double>(in.n) - 1 + h.delta);
  h.log_bound = log_c + exponent * std::log(in.B) + std::log(std::log(in.B));
  h.bound = std::exp(h.log_bound);
  return h;
}

}  // namespace hitsieve
