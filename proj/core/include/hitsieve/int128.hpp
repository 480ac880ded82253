#pragma once

#include <cstdint>
#include <string>

#include "hitsieve/errors.hpp"

namespace hitsieve {

using i128 = __int128;
using u128 = unsigned __int128;

inline i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int128 addition overflow");
  return r;
}

inline i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int128 subtraction overflow");
  return r;
}

inline i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int128 multiplication overflow");
  return r;
}

inline u128 abs_u128(i128 a) { return a < 0 ? u128(0) - u128(a) : u128(a); }

// Non-negative remainder of a modulo m (m > 0).
inline std::uint64_t mod_u64(i128 a, std::uint64_t m) {
  i128 r = a % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

i128 gcd_i128(i128 a, i128 b);

// floor(sqrt(n)), exact.
u128 isqrt(u128 n);

// True iff n >= 0 and n is the square of an integer.
bool is_perfect_square(i128 n);

std::string to_string(i128 v);
std::string to_string_u(u128 v);

// Parses an optionally signed decimal; throws DomainError on junk, OverflowError on overflow.
i128 parse_i128(const std::string& s);

}  // namespace hitsieve
