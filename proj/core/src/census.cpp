#include "hitsieve/census.hpp"

#include <chrono>
#include <cmath>

#include "hitsieve/errors.hpp"
#include "hitsieve/factor.hpp"

namespace hitsieve {

namespace {

struct BoxCursor {
  unsigned n;
  std::int64_t B;
  std::vector<std::int64_t> t;

  BoxCursor(unsigned n_, std::int64_t B_, std::uint64_t index) : n(n_), B(B_), t(box_point(n_, B_, index)) {}
  void advance() {
    for (unsigned k = n; k-- > 0;) {
      if (t[k] < B) {
        ++t[k];
        return;
      }
      t[k] = -B;
    }
  }
};

template <class Pred>
std::uint64_t count_box(unsigned n, std::int64_t B, const Parallelism& par, Pred pred) {
  const std::uint64_t total = box_size(n, B);
  return shard_and_merge<std::uint64_t>(
      total, par, 0,
      [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t c = 0;
        BoxCursor cur(n, B, lo);
        for (std::uint64_t i = lo; i < hi; ++i, cur.advance()) c += pred(cur.t);
        return c;
      },
      [](std::uint64_t a, std::uint64_t b) { return a + b; });
}

}  // namespace

const char* to_string(CensusMode mode) { return mode == CensusMode::Exact ? "exact" : "certificate"; }

std::uint64_t box_size(unsigned n, std::int64_t B) {
  if (n == 0) throw RangeError("box_size: n must be positive");
  if (B < 0) throw RangeError("box_size: B must be >= 0");
  const double side = 2.0 * static_cast<double>(B) + 1;
  if (std::pow(side, n) > static_cast<double>(kBoxGuard)) throw ResourceError("census: box exceeds 1e9 points");
  std::uint64_t s = 1;
  for (unsigned i = 0; i < n; ++i) s *= static_cast<std::uint64_t>(2 * B + 1);
  if (s > kBoxGuard) throw ResourceError("census: box exceeds 1e9 points");
  return s;
}

std::vector<std::int64_t> box_point(unsigned n, std::int64_t B, std::uint64_t index) {
  const auto side = static_cast<std::uint64_t>(2 * B + 1);
  std::vector<std::int64_t> t(n);
  for (unsigned k = n; k-- > 0;) {
    t[k] = static_cast<std::int64_t>(index % side) - B;
    index /= side;
  }
  return t;
}

std::uint64_t CensusReport::total() const {
  std::uint64_t s = 0;
  for (const auto& [k, v] : counts) s += v;
  return s;
}

std::uint64_t CensusReport::tag_count(GaloisTag tag) const {
  const std::string name = to_string(tag);
  std::uint64_t s = 0;
  for (const auto& [k, v] : counts)
    if (k.compare(0, name.size(), name) == 0) s += v;
  return s;
}

std::uint64_t CensusReport::e_n_lower() const {
  return total() - tag_count(GaloisTag::FullSymmetric) - tag_count(GaloisTag::Undetermined);
}

std::uint64_t CensusReport::e_n_upper() const { return e_n_lower() + tag_count(GaloisTag::Undetermined); }

CensusReport& CensusReport::merge(const CensusReport& o) {
  if (o.n != n || o.B != B || o.mode != mode || o.prime_budget != prime_budget || o.seed != seed)
    throw DomainError("CensusReport::merge: parameter mismatch");
  for (const auto& [k, v] : o.counts) counts[k] += v;
  for (const auto& [k, v] : o.subtypes) subtypes[k] += v;
  wall_time_ms += o.wall_time_ms;
  return *this;
}

double e_n_shape(unsigned n, std::int64_t B) {
  const double b = static_cast<double>(B);
  if (n == 2) return 2 * b * std::log(b);
  return std::pow(b, n - 0.5);
}

std::string e_n_shape_name(unsigned n) { return n == 2 ? "2B log B" : "B^(" + std::to_string(n) + "-1/2)"; }

Table CensusReport::table() const {
  Table t;
  t.columns = {"n", "B", "label", "count", "bound_shape", "ratio", "seed", "budget"};
  auto row = [&](const std::string& label, std::uint64_t c, const std::string& shape, double value) {
    t.add({std::to_string(n), std::to_string(B), label, std::to_string(c), shape,
           format_double(value > 0 ? static_cast<double>(c) / value : 0.0), std::to_string(seed),
           std::to_string(prime_budget)});
  };
  const double shape = e_n_shape(n, B);
  const double reducible_shape = std::pow(static_cast<double>(B), n - 1.0);
  for (const auto& [label, c] : counts)
    row(label, c, label.rfind("Reducible", 0) == 0 ? "B^(" + std::to_string(n) + "-1)" : e_n_shape_name(n), 
        label.rfind("Reducible", 0) == 0 ? reducible_shape : shape);
  row("E_n_lower", e_n_lower(), e_n_shape_name(n), shape);
  row("E_n_upper", e_n_upper(), e_n_shape_name(n), shape);
  return t;
}

nlohmann::json CensusReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["B"] = B;
  j["mode"] = to_string(mode);
  j["prime_budget"] = prime_budget;
  j["seed"] = seed;
  j["counts"] = counts;
  j["subtypes"] = subtypes;
  j["total"] = total();
  j["E_n_lower"] = e_n_lower();
  j["E_n_upper"] = e_n_upper();
  j["bound_shape"] = e_n_shape_name(n);
  j["bound_value"] = e_n_shape(n, B);
  j["fitted_constant_lower"] = static_cast<double>(e_n_lower()) / e_n_shape(n, B);
  return j;
}

GaloisLabel classify_point(const std::vector<std::int64_t>& t, CensusMode mode, unsigned prime_budget,
                           std::uint64_t seed) {
  if (mode == CensusMode::Exact) return galois_exact(t);
  return sn_certificate(family_poly(t), prime_budget, seed);
}

CensusReport count_census_range(unsigned n, std::int64_t B, CensusMode mode, unsigned prime_budget,
                                std::uint64_t seed, std::uint64_t lo, std::uint64_t hi) {
  if (n < 2) throw RangeError("count_census: n must be >= 2");
  if (mode == CensusMode::Exact && n > 4) throw RangeError("count_census: exact mode needs n <= 4");
  CensusReport r;
  r.n = n;
  r.B = B;
  r.mode = mode;
  r.prime_budget = prime_budget;
  r.seed = seed;
  const std::uint64_t total = box_size(n, B);
  hi = std::min(hi, total);
  if (lo >= hi) return r;
  BoxCursor cur(n, B, lo);
  for (std::uint64_t i = lo; i < hi; ++i, cur.advance()) {
    const auto label = classify_point(cur.t, mode, prime_budget, seed);
    ++r.counts[label.to_string()];
    if (!label.subtype.empty()) ++r.subtypes[label.subtype];
  }
  return r;
}

CensusReport count_census(unsigned n, std::int64_t B, CensusMode mode, unsigned prime_budget, std::uint64_t seed,
                          const Parallelism& par) {
  const auto start = std::chrono::steady_clock::now();
  CensusReport init;
  init.n = n;
  init.B = B;
  init.mode = mode;
  init.prime_budget = prime_budget;
  init.seed = seed;
  auto out = shard_and_merge<CensusReport>(
      box_size(n, B), par, init,
      [&](std::uint64_t lo, std::uint64_t hi) { return count_census_range(n, B, mode, prime_budget, seed, lo, hi); },
      [](CensusReport a, CensusReport b) { return a.merge(b); });
  out.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::uint64_t count_reducible_by_degree(unsigned n, std::int64_t B, unsigned i, const Parallelism& par) {
  if (n < 2 || n > 8) throw RangeError("count_reducible_by_degree: n must lie in [2, 8]");
  if (i < 1 || 2 * i > n) throw RangeError("count_reducible_by_degree: need 1 <= i <= n/2");
  return count_box(n, B, par, [i](const std::vector<std::int64_t>& t) {
    const IntPoly f = family_poly(t);
    if (irreducible_by_reduction(f)) return false;
    const auto degs = factor_degrees(int_poly_factor(f, 0));
    return std::find(degs.begin(), degs.end(), i) != degs.end();
  });
}

std::uint64_t count_disc_square(unsigned n, std::int64_t B, const Parallelism& par) {
  if (n < 2 || n > 8) throw RangeError("count_disc_square: n must lie in [2, 8]");
  return count_box(n, B, par, [](const std::vector<std::int64_t>& t) {
    return is_perfect_square(int_poly_disc(family_poly(t)));
  });
}

}  // namespace hitsieve
