#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// calls into the library's algorithms beyond plain value types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> primes_trial(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= x; ++n)
    if (is_prime_trial(n)) out.push_back(n);
  return out;
}

inline long long mod(long long a, long long m) { return ((a % m) + m) % m; }

inline long long powmod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b = mod(b, m);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = static_cast<long long>(static_cast<__int128>(r) * b % m);
    b = static_cast<long long>(static_cast<__int128>(b) * b % m);
  }
  return r;
}

// Legendre symbol by enumerating the squares of F_p.
inline int legendre_enum(long long a, long long p) {
  a = mod(a, p);
  if (a == 0) return 0;
  for (long long u = 1; u < p; ++u)
    if (u * u % p == a) return 1;
  return -1;
}

// Dense polynomial over F_p as a coefficient vector (constant first, trimmed).
using Poly = std::vector<long long>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline long long eval_mod(const Poly& f, long long u, long long p) {
  long long acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * u + *it) % p;
  return mod(acc, p);
}

// Long division by a monic g over F_p; returns true iff remainder is zero.
inline bool divides_mod(const Poly& f, const Poly& g, long long p, Poly* quotient = nullptr) {
  Poly r = f;
  for (auto& v : r) v = mod(v, p);
  trim(r);
  const std::size_t dg = g.size() - 1;
  if (r.size() < g.size()) {
    if (quotient) quotient->clear();
    return r.empty();
  }
  Poly q(r.size() - dg, 0);
  for (std::size_t k = r.size(); k-- > dg;) {
    long long c = r[k];
    q[k - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) r[k - dg + j] = mod(r[k - dg + j] - c * g[j], p);
  }
  trim(r);
  if (quotient) *quotient = q;
  return r.empty();
}

// Factor degrees (with multiplicity) of a monic polynomial over a small F_p by
// trial division over all monic polynomials of increasing degree.
inline std::vector<unsigned> factor_degrees_trial(Poly f, long long p) {
  for (auto& v : f) v = mod(v, p);
  trim(f);
  std::vector<unsigned> degs;
  while (f.size() > 1) {
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    bool found = false;
    for (unsigned d = 1; d <= n / 2 && !found; ++d) {
      long long count = 1;
      for (unsigned i = 0; i < d; ++i) count *= p;
      for (long long code = 0; code < count && !found; ++code) {
        Poly g(d + 1, 0);
        g[d] = 1;
        long long c = code;
        for (unsigned i = 0; i < d; ++i) {
          g[i] = c % p;
          c /= p;
        }
        Poly q;
        if (divides_mod(f, g, p, &q)) {
          degs.push_back(d);
          f = q;
          found = true;
        }
      }
    }
    if (!found) {
      degs.push_back(n);
      break;
    }
  }
  std::sort(degs.begin(), degs.end());
  return degs;
}

// Integer roots of a monic integer polynomial by scanning divisors of the
// constant term (0 is a root iff the constant term vanishes).
inline std::vector<long long> integer_roots(const std::vector<long long>& coeffs_low_first) {
  std::vector<long long> roots;
  auto eval = [&](long long x) {
    __int128 a = 0;
    for (auto it = coeffs_low_first.rbegin(); it != coeffs_low_first.rend(); ++it) a = a * x + *it;
    return a;
  };
  std::size_t z = 0;
  while (z + 1 < coeffs_low_first.size() && coeffs_low_first[z] == 0) ++z;
  if (z > 0) roots.push_back(0);
  const long long c0 = coeffs_low_first.empty() ? 0 : coeffs_low_first[z];
  const long long m = c0 < 0 ? -c0 : c0;
  for (long long d = 1; d <= m; ++d) {
    if (m % d) continue;
    if (eval(d) == 0) roots.push_back(d);
    if (eval(-d) == 0) roots.push_back(-d);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

inline unsigned long long isqrt_binary(unsigned __int128 n) {
  unsigned long long lo = 0, hi = 1ULL << 63;
  while (lo < hi) {
    unsigned long long mid = lo + (hi - lo) / 2 + ((hi - lo) & 1);
    if (static_cast<unsigned __int128>(mid) * mid <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

}  // namespace oracle
