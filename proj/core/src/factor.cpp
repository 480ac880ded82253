#include "hitsieve/factor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "hitsieve/errors.hpp"
#include "hitsieve/primes.hpp"

namespace hitsieve {

unsigned FactorShape::total_degree() const {
  unsigned d = 0;
  for (auto [deg, mult] : parts) d += deg * mult;
  return d;
}

std::vector<unsigned> FactorShape::degree_multiset() const {
  std::vector<unsigned> out;
  for (auto [deg, mult] : parts)
    for (unsigned i = 0; i < mult; ++i) out.push_back(deg);
  std::sort(out.begin(), out.end());
  return out;
}

bool FactorShape::squarefree() const {
  return std::all_of(parts.begin(), parts.end(), [](auto pr) { return pr.second == 1; });
}

std::string FactorShape::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(parts[i].first) + "," + std::to_string(parts[i].second) + ")";
  }
  return s + "}";
}

namespace {

void require_odd_nonzero(const FpPoly& f, const char* who) {
  if (f.is_zero()) throw DomainError(std::string(who) + ": zero polynomial");
  if (f.modulus() == 2) throw DomainError(std::string(who) + ": characteristic 2 is not supported");
}

// g(x) with g(x^p) = f(x); valid when f' = 0 (all exponents divisible by p).
FpPoly pth_root(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> c;
  for (std::size_t k = 0; k < f.coeffs().size(); k += p) c.push_back(f.coeffs()[k]);
  return FpPoly(p, std::move(c));
}

// Splits a monic square-free f whose irreducible factors all have degree d.
void equal_degree_split(const FpPoly& f, unsigned d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = f.modulus();
  const FpPoly one = FpPoly::one(p);
  for (;;) {
    std::vector<std::uint64_t> rc(static_cast<std::size_t>(f.degree()));
    for (auto& v : rc) v = rng() % p;
    const FpPoly a(p, std::move(rc));
    if (a.degree() < 1) continue;
    // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
    FpPoly frob = a;
    FpPoly norm = a;
    for (unsigned i = 1; i < d; ++i) {
      frob = powmod(frob, p, f);
      norm = (norm * frob) % f;
    }
    const FpPoly b = powmod(norm, (p - 1) / 2, f) - one;
    const FpPoly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FpPoly, unsigned>> squarefree_decomposition(const FpPoly& f_in) {
  if (f_in.is_zero()) throw DomainError("squarefree_decomposition: zero polynomial");
  const FpPoly f = f_in.monic();
  const std::uint64_t p = f.modulus();
  std::vector<std::pair<FpPoly, unsigned>> out;
  if (f.degree() == 0) return out;
  FpPoly c = gcd(f, f.derivative());
  FpPoly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    FpPoly y = gcd(w, c);
    FpPoly z = w / y;
    if (z.degree() > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    for (auto& [g, j] : squarefree_decomposition(pth_root(c))) out.emplace_back(g, static_cast<unsigned>(j * p));
  }
  return out;
}

bool is_squarefree(const FpPoly& f) {
  if (f.is_zero()) return false;
  return gcd(f, f.derivative()).degree() == 0;
}

std::vector<std::pair<FpPoly, unsigned>> distinct_degree_factor(const FpPoly& f_in) {
  FpPoly g = f_in.monic();
  const std::uint64_t p = g.modulus();
  const FpPoly x = FpPoly::x(p);
  std::vector<std::pair<FpPoly, unsigned>> out;
  FpPoly h = x % g;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(g.degree()); ++d) {
    h = powmod(h, p, g);
    FpPoly part = gcd(g, h - x);
    if (part.degree() > 0) {
      g = g / part;
      h = h % g;
      out.emplace_back(std::move(part), d);
    }
  }
  if (g.degree() > 0) out.emplace_back(g, static_cast<unsigned>(g.degree()));
  return out;
}

FactorShape fp_factor_shape(const FpPoly& f) {
  require_odd_nonzero(f, "fp_factor_shape");
  FactorShape shape;
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    for (const auto& [part, d] : distinct_degree_factor(g)) {
      const unsigned count = static_cast<unsigned>(part.degree()) / d;
      for (unsigned k = 0; k < count; ++k) shape.parts.emplace_back(d, mult);
    }
  }
  std::sort(shape.parts.begin(), shape.parts.end());
  return shape;
}

std::vector<FpFactor> fp_factor_full(const FpPoly& f, std::uint64_t seed) {
  require_odd_nonzero(f, "fp_factor_full");
  std::mt19937_64 rng(seed);
  std::vector<FpFactor> out;
  for (const auto& [g, mult] : squarefree_decomposition(f)) {
    for (const auto& [part, d] : distinct_degree_factor(g)) {
      std::vector<FpPoly> pieces;
      equal_degree_split(part, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({std::move(piece), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
    if (a.factor == b.factor) return a.multiplicity < b.multiplicity;
    return a.factor < b.factor;
  });
  return out;
}

i128 int_poly_disc(const IntPoly& f) {
  const int n = f.degree();
  if (n < 2) throw DomainError("int_poly_disc: degree must be at least 2");
  if (!f.is_monic()) throw DomainError("int_poly_disc: polynomial must be monic");
  const IntPoly df = f.derivative();
  const int m = 2 * n - 1;
  std::vector<std::vector<i128>> s(m, std::vector<i128>(m, 0));
  // n-1 shifted rows of f, then n shifted rows of f', coefficients high to low.
  for (int r = 0; r < n - 1; ++r)
    for (int k = 0; k <= n; ++k) s[r][r + k] = f[static_cast<std::size_t>(n - k)];
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= n - 1; ++k) s[n - 1 + r][r + k] = df[static_cast<std::size_t>(n - 1 - k)];

  // Bareiss fraction-free elimination; every division below is exact.
  i128 sign = 1;
  i128 prev = 1;
  for (int k = 0; k < m - 1; ++k) {
    if (s[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < m; ++r)
        if (s[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(s[k], s[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j)
        s[i][j] = checked_sub(checked_mul(s[i][j], s[k][k]), checked_mul(s[i][k], s[k][j])) / prev;
      s[i][k] = 0;
    }
    prev = s[k][k];
  }
  const i128 resultant = sign * s[m - 1][m - 1];
  const bool negate = ((n * (n - 1) / 2) % 2) == 1;
  return negate ? -resultant : resultant;
}

namespace {

constexpr unsigned kMaxFactorDegree = 8;
constexpr i128 kMaxFactorCoeff = i128(1) << 40;
constexpr int kSquarefreePrimeTries = 64;

// Advances idx to the next k-combination of {0..n-1}; false when exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<IntPoly> int_poly_factor(const IntPoly& f, std::uint64_t seed) {
  if (!f.is_monic()) throw DomainError("int_poly_factor: polynomial must be monic");
  const int n = f.degree();
  if (n > static_cast<int>(kMaxFactorDegree)) throw RangeError("int_poly_factor: degree exceeds 8");
  for (i128 c : f.coeffs())
    if (c > kMaxFactorCoeff || c < -kMaxFactorCoeff)
      throw RangeError("int_poly_factor: coefficient exceeds 2^40");
  if (n <= 1) return n == 1 ? std::vector<IntPoly>{f} : std::vector<IntPoly>{};

  // Every monic factor g of f satisfies |g_i| <= 2^n * ||f||_2.
  const long double mignotte = std::ldexp(f.l2_norm(), n);
  const u128 bound = static_cast<u128>(std::ceil(mignotte));
  if (mignotte * 2 >= std::ldexp(1.0L, 62))
    throw ResourceError("int_poly_factor: no usable prime below 2^62 for this coefficient bound");
  const std::uint64_t threshold = static_cast<std::uint64_t>(2 * bound);

  // Prefer a prime that keeps f square-free; for f with repeated factors no
  // such prime exists and the multiset recombination below still applies.
  std::uint64_t p = next_prime_above(threshold);
  {
    std::uint64_t q = p;
    for (int tries = 0; tries < kSquarefreePrimeTries; ++tries, q = next_prime_above(q)) {
      if (is_squarefree(f.mod(q))) {
        p = q;
        break;
      }
    }
  }

  std::vector<FpPoly> local;
  for (auto& [g, mult] : fp_factor_full(f.mod(p), seed))
    for (unsigned i = 0; i < mult; ++i) local.push_back(g);

  std::vector<IntPoly> result;
  IntPoly remaining = f;
  std::size_t k = 1;
  while (2 * k <= local.size()) {
    bool found = false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      FpPoly prod = FpPoly::one(p);
      for (std::size_t i : idx) prod = prod * local[i];
      const IntPoly cand = IntPoly::from_symmetric(prod);
      // Cheap filter: constant terms must divide.
      const i128 c0 = cand[0], r0 = remaining[0];
      if (c0 == 0 ? r0 != 0 : (r0 % c0) != 0) continue;
      IntPoly quotient;
      if (divide_monic(remaining, cand, bound, quotient)) {
        result.push_back(cand);
        remaining = std::move(quotient);
        for (std::size_t j = k; j-- > 0;) local.erase(local.begin() + static_cast<std::ptrdiff_t>(idx[j]));
        found = true;
        break;
      }
    } while (next_combination(idx, local.size()));
    if (!found) ++k;
  }
  if (remaining.degree() > 0) result.push_back(remaining);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<unsigned> factor_degrees(const std::vector<IntPoly>& factors) {
  std::vector<unsigned> d;
  for (const auto& g : factors) d.push_back(static_cast<unsigned>(g.degree()));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace hitsieve
