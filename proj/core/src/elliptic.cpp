#include "hitsieve/elliptic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "hitsieve/errors.hpp"

namespace hitsieve {

namespace {

std::uint64_t residue(std::int64_t v, std::uint64_t m) { return mod_u64(static_cast<i128>(v), m); }

void require_good_prime(const CurveQ& E, std::uint64_t p) {
  if (p < 5 || !is_prime(p)) throw DomainError("point count: p must be a prime >= 5");
  if (p > kPointCountGuard) throw DomainError("point count: p exceeds 1e6");
  if (mod_u64(E.disc_core(), p) == 0) throw DomainError("point count: bad reduction at p");
}

// a_p without the precondition checks.
std::int64_t trace_unchecked(const CurveQ& E, std::uint64_t p, const QuadraticCharacter& chi) {
  const std::uint64_t a = residue(E.a, p), b = residue(E.b, p);
  std::int64_t s = 0;
  for (std::uint64_t u = 0; u < p; ++u) {
    const std::uint64_t u2 = u * u % p;
    s += chi((u2 * u % p + a * u + b) % p);
  }
  return -s;
}

SerreClass serre_of(std::int64_t a_p, std::uint64_t p, std::uint32_t ell) {
  return classify_trace_det(static_cast<std::uint32_t>(residue(a_p, ell)), static_cast<std::uint32_t>(p % ell), ell);
}

void check_ell(std::uint32_t ell) {
  if (ell < 5 || !is_prime(ell)) throw DomainError("ell must be a prime >= 5");
}

}  // namespace

CurveQ CurveQ::make(std::int64_t a, std::int64_t b) {
  CurveQ E{a, b};
  if (E.disc_core() == 0) throw DomainError("CurveQ: singular model");
  return E;
}

i128 CurveQ::disc_core() const {
  const i128 A = a, Bv = b;
  return checked_add(checked_mul(4, checked_mul(A, checked_mul(A, A))), checked_mul(27, checked_mul(Bv, Bv)));
}

std::string CurveQ::to_string() const {
  return "y^2 = x^3 + " + std::to_string(a) + "x + " + std::to_string(b);
}

FrobData point_count_mod_p(const CurveQ& E, std::uint64_t p, const QuadraticCharacter* chi) {
  require_good_prime(E, p);
  if (chi && chi->modulus() != p) throw DomainError("point_count_mod_p: character table for a different prime");
  std::optional<QuadraticCharacter> own;
  if (!chi) chi = &own.emplace(p);
  const std::int64_t ap = trace_unchecked(E, p, *chi);
  // Hasse: a_p^2 <= 4p.
  if (static_cast<i128>(ap) * ap > 4 * static_cast<i128>(p)) throw DomainError("point_count_mod_p: Hasse bound violated");
  return {p, ap};
}

std::uint64_t point_count_enumerate(const CurveQ& E, std::uint64_t p) {
  require_good_prime(E, p);
  std::vector<std::uint32_t> roots(p, 0);  // number of y with y^2 = v
  for (std::uint64_t y = 0; y < p; ++y) ++roots[y * y % p];
  const std::uint64_t a = residue(E.a, p), b = residue(E.b, p);
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < p; ++x) n += roots[(x * x % p * x % p + a * x + b) % p];
  return n;
}

SerreClass frobenius_serre_class(const CurveQ& E, std::uint64_t p, std::uint32_t ell) {
  check_ell(ell);
  if (p % ell == 0) throw DomainError("frobenius_serre_class: p must differ from ell");
  return serre_of(point_count_mod_p(E, p).a_p, p, ell);
}

std::vector<int> SurjectivityCertificate::gaps() const {
  std::vector<int> g;
  for (int i = 0; i < 3; ++i)
    if (!witness[i]) g.push_back(i + 1);
  return g;
}

namespace {

void absorb(SurjectivityCertificate& c, const SerreClass& s, std::uint64_t p) {
  const bool hit[3] = {s.in_C1, s.in_C2, s.in_C3};
  for (int i = 0; i < 3; ++i)
    if (hit[i] && !c.witness[i]) c.witness[i] = p;
  c.certified = c.witness[0] && c.witness[1] && c.witness[2];
}

}  // namespace

SurjectivityCertificate certify_surjective(const CurveQ& E, std::uint32_t ell, std::uint64_t prime_bound) {
  check_ell(ell);
  if (prime_bound > kPointCountGuard) throw DomainError("certify_surjective: prime bound exceeds 1e6");
  SurjectivityCertificate c;
  const i128 disc = E.disc_core();
  if (prime_bound < 5) return c;
  for (std::uint64_t p : primes_up_to(prime_bound)) {
    if (p < 5 || p == ell || mod_u64(disc, p) == 0) continue;
    ++c.primes_scanned;
    const QuadraticCharacter chi(p);
    absorb(c, serre_of(trace_unchecked(E, p, chi), p, ell), p);
    if (c.certified) break;
  }
  return c;
}

void FamilySpec::validate() const {
  const IntPoly d = IntPoly({4}) * a * a * a + IntPoly({27}) * b * b;
  if (d.is_zero()) throw DomainError("FamilySpec: discriminant vanishes identically");
}

std::optional<CurveQ> FamilySpec::fibre(std::int64_t t) const {
  const i128 av = a.eval(t), bv = b.eval(t);
  const i128 lim = std::numeric_limits<std::int64_t>::max();
  if (av > lim || av < -lim || bv > lim || bv < -lim) throw OverflowError("FamilySpec: fibre coefficients exceed 64 bits");
  CurveQ E{static_cast<std::int64_t>(av), static_cast<std::int64_t>(bv)};
  if (E.disc_core() == 0) return std::nullopt;
  return E;
}

FamilySpec legendre_family() {
  FamilySpec f;
  f.name = "legendre";
  f.a = IntPoly({-27, 27, -27});  // -27(t^2 - t + 1), low degree first
  // -27(t + 1)(2t - 1)(t - 2) = -27(2t^3 - 3t^2 - 3t + 2)
  f.b = IntPoly({-54, 81, 81, -54});
  return f;
}

EllipticCensusReport& EllipticCensusReport::merge(const EllipticCensusReport& o) {
  if (o.family != family || o.B != B || o.prime_budget != prime_budget)
    throw DomainError("EllipticCensusReport::merge: parameter mismatch");
  for (const auto& [ell, c] : o.per_ell) {
    auto& mine = per_ell[ell];
    mine.certified += c.certified;
    mine.uncertified += c.uncertified;
    mine.excluded += c.excluded;
  }
  for (const auto& [ell, ts] : o.uncertified_t) {
    auto& mine = uncertified_t[ell];
    mine.insert(mine.end(), ts.begin(), ts.end());
    std::sort(mine.begin(), mine.end());
  }
  wall_time_ms += o.wall_time_ms;
  return *this;
}

double elliptic_bound_shape(std::uint32_t ell, std::int64_t B) {
  const double b = static_cast<double>(std::max<std::int64_t>(B, 2));
  return std::pow(static_cast<double>(ell), 6) * std::sqrt(b) * std::log(b);
}

Table EllipticCensusReport::table() const {
  Table t;
  t.columns = {"family", "ell", "B", "budget", "certified", "uncertified", "excluded", "bound_shape"};
  for (const auto& [ell, c] : per_ell)
    t.add({family, std::to_string(ell), std::to_string(B), std::to_string(prime_budget), std::to_string(c.certified),
           std::to_string(c.uncertified), std::to_string(c.excluded), "ell^6 B^(1/2) log B"});
  return t;
}

nlohmann::json EllipticCensusReport::to_json() const {
  nlohmann::json j;
  j["family"] = family;
  j["B"] = B;
  j["prime_budget"] = prime_budget;
  j["bound_shape"] = "ell^6 B^(1/2) log B";
  j["bound_note"] = "shape-only; the threshold on ell has no explicit constant";
  auto& rows = j["per_ell"] = nlohmann::json::array();
  for (const auto& [ell, c] : per_ell) {
    const double shape = elliptic_bound_shape(ell, B);
    nlohmann::json r;
    r["ell"] = ell;
    r["certified"] = c.certified;
    r["uncertified"] = c.uncertified;
    r["excluded"] = c.excluded;
    r["bound_value"] = shape;
    r["fitted_constant"] = static_cast<double>(c.uncertified) / shape;
    const auto it = uncertified_t.find(ell);
    r["uncertified_t"] = it == uncertified_t.end() ? std::vector<std::int64_t>{} : it->second;
    rows.push_back(std::move(r));
  }
  return j;
}

EllipticCensusReport family_census(const FamilySpec& fam, std::int64_t B, const std::vector<std::uint32_t>& ells,
                                   std::uint64_t prime_budget, const Parallelism& par) {
  const auto start = std::chrono::steady_clock::now();
  fam.validate();
  if (B < 0 || B > kFamilyGuard) throw ResourceError("family_census: B must lie in [0, 1e4]");
  if (prime_budget > kPointCountGuard) throw ResourceError("family_census: prime budget exceeds 1e6");
  for (auto ell : ells)
    if (ell < kMinCensusEll || ell > kMaxCensusEll || !is_prime(ell))
      throw DomainError("family_census: ell must be a prime in [5, 37]");

  // Character tables are shared read-only across shards.
  std::vector<QuadraticCharacter> chis;
  if (prime_budget >= 5)
    for (std::uint64_t p : primes_up_to(prime_budget))
      if (p >= 5) chis.emplace_back(p);

  EllipticCensusReport init;
  init.family = fam.name;
  init.B = B;
  init.prime_budget = prime_budget;
  for (auto ell : ells) init.per_ell[ell];

  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    EllipticCensusReport r = init;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::int64_t t = static_cast<std::int64_t>(i) - B;
      const auto E = fam.fibre(t);
      if (!E) {
        for (auto ell : ells) ++r.per_ell[ell].excluded;
        continue;
      }
      const i128 disc = E->disc_core();
      std::map<std::uint32_t, SurjectivityCertificate> certs;
      std::size_t open = ells.size();
      for (const auto& chi : chis) {
        if (open == 0) break;
        const std::uint64_t p = chi.modulus();
        if (mod_u64(disc, p) == 0) continue;
        const std::int64_t ap = trace_unchecked(*E, p, chi);
        for (auto ell : ells) {
          auto& c = certs[ell];
          if (c.certified || p == ell) continue;
          ++c.primes_scanned;
          absorb(c, serre_of(ap, p, ell), p);
          if (c.certified) --open;
        }
      }
      for (auto ell : ells) {
        if (certs[ell].certified) {
          ++r.per_ell[ell].certified;
        } else {
          ++r.per_ell[ell].uncertified;
          r.uncertified_t[ell].push_back(t);
        }
      }
    }
    return r;
  };
  auto out = shard_and_merge<EllipticCensusReport>(static_cast<std::uint64_t>(2 * B + 1), par, init, work,
                                                   [](EllipticCensusReport a, const EllipticCensusReport& b) {
                                                     return a.merge(b);
                                                   });
  out.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace hitsieve
