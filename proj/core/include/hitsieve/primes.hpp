#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hitsieve/int128.hpp"

namespace hitsieve {

using PrimeList = std::vector<std::uint32_t>;

inline constexpr std::uint64_t kMaxSieveLimit = 1'000'000'000ULL;

// All primes <= x in ascending order. Requires 2 <= x <= 1e9.
PrimeList primes_up_to(std::uint64_t x);

// Calls fn(p) for every prime lo <= p <= hi, ascending, using a segmented
// sieve (memory O(sqrt(hi))). hi <= 1e12.
void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn);

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Multiplicative inverse of a modulo m; a must be a unit.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

// Smallest prime strictly greater than n (n < 2^63).
std::uint64_t next_prime_above(std::uint64_t n);

// Legendre symbol (a/p) for an odd prime p, by Euler's criterion.
// Throws DomainError when p is not an odd prime.
int legendre(i128 a, std::uint64_t p);

// Precomputed quadratic character of F_p for tight loops. p odd prime, p <= 2^26.
class QuadraticCharacter {
 public:
  explicit QuadraticCharacter(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  // chi(u) for u already reduced into [0, p).
  int operator()(std::uint64_t u) const { return table_[u]; }
  int of(i128 a) const { return table_[mod_u64(a, p_)]; }

 private:
  std::uint64_t p_;
  std::vector<std::int8_t> table_;
};

// Sum over primes p <= x of log(p)/p. Requires 2 <= x <= 1e8.
double mertens_sum(double x);

// Distinct prime divisors of |n| (n != 0), ascending, by trial division.
std::vector<std::uint64_t> prime_divisors(u128 n);

}  // namespace hitsieve
