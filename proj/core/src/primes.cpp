#include "hitsieve/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hitsieve/errors.hpp"

namespace hitsieve {

namespace {

// Odd primes <= limit (plus 2), simple sieve; used to seed segments.
std::vector<std::uint32_t> base_primes(std::uint64_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn) {
  if (hi > 1'000'000'000'000ULL) throw RangeError("for_each_prime: hi exceeds 1e12");
  if (lo < 2) lo = 2;
  if (hi < lo) return;
  const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi))) + 1;
  const auto small = base_primes(root);
  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<std::uint8_t> seg(kSegment);
  for (std::uint64_t start = lo; start <= hi; start += kSegment) {
    const std::uint64_t end = std::min(hi, start + kSegment - 1);
    std::fill(seg.begin(), seg.begin() + (end - start + 1), 1);
    for (std::uint32_t p : small) {
      const std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
      if (pp > end) break;
      std::uint64_t first = std::max(pp, (start + p - 1) / p * p);
      for (std::uint64_t j = first; j <= end; j += p) seg[j - start] = 0;
    }
    for (std::uint64_t v = start; v <= end; ++v)
      if (seg[v - start]) fn(v);
    if (end == hi) break;
  }
}

PrimeList primes_up_to(std::uint64_t x) {
  if (x < 2 || x > kMaxSieveLimit)
    throw RangeError("primes_up_to: x must lie in [2, 1e9], got " + std::to_string(x));
  PrimeList out;
  // pi(x) < 1.26 x / ln x for x > 1
  out.reserve(static_cast<std::size_t>(1.26 * x / std::log(static_cast<double>(x)) + 8));
  for_each_prime(2, x, [&](std::uint64_t p) { out.push_back(static_cast<std::uint32_t>(p)); });
  return out;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  i128 t = 0, new_t = 1;
  i128 r = m, new_r = a % m;
  while (new_r != 0) {
    i128 q = r / new_r;
    i128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw DomainError("invmod: element is not a unit");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kSmall) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  // Trial division is cheaper than Miller-Rabin below 2^20.
  if (n < (1ULL << 20)) {
    for (std::uint64_t q = 41; q * q <= n; q += 2)
      if (n % q == 0) return false;
    return true;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kSmall) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime_above(std::uint64_t n) {
  if (n >= (1ULL << 63)) throw RangeError("next_prime_above: argument too large");
  // Cached table covers the small moduli used by integer factorization.
  static const PrimeList cache = primes_up_to(1 << 20);
  if (n < cache.back()) return *std::upper_bound(cache.begin(), cache.end(), n);
  std::uint64_t c = n + 1;
  if (c % 2 == 0) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

int legendre(i128 a, std::uint64_t p) {
  if (p < 3 || !is_prime(p))
    throw DomainError("legendre: modulus must be an odd prime, got " + std::to_string(p));
  const std::uint64_t r = mod_u64(a, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

QuadraticCharacter::QuadraticCharacter(std::uint64_t p) : p_(p), table_(p, -1) {
  if (p < 3 || p > (1ULL << 26) || !is_prime(p))
    throw DomainError("QuadraticCharacter: need an odd prime <= 2^26");
  table_[0] = 0;
  for (std::uint64_t u = 1; u <= p / 2; ++u) table_[mulmod(u, u, p)] = 1;
}

double mertens_sum(double x) {
  if (!(x >= 2.0) || x > 1e8) throw RangeError("mertens_sum: x must lie in [2, 1e8]");
  double sum = 0.0;
  for_each_prime(2, static_cast<std::uint64_t>(std::floor(x)), [&](std::uint64_t p) {
    const double dp = static_cast<double>(p);
    sum += std::log(dp) / dp;
  });
  return sum;
}

std::vector<std::uint64_t> prime_divisors(u128 n) {
  if (n == 0) throw DomainError("prime_divisors: zero has no finite factorization");
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; static_cast<u128>(d) * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) {
    if (n > UINT64_MAX) throw ResourceError("prime_divisors: cofactor exceeds 64 bits");
    out.push_back(static_cast<std::uint64_t>(n));
  }
  return out;
}

}  // namespace hitsieve
