#include "hitsieve/int128.hpp"

#include <algorithm>
#include <cmath>

namespace hitsieve {

i128 gcd_i128(i128 a, i128 b) {
  u128 x = abs_u128(a), y = abs_u128(b);
  while (y != 0) {
    u128 t = x % y;
    x = y;
    y = t;
  }
  return static_cast<i128>(x);
}

u128 isqrt(u128 n) {
  if (n < 2) return n;
  // Seed from long double, then correct; the estimate is within a few units.
  u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  const u128 limit = (u128(1) << 64) - 1;  // sqrt of the largest u128 fits 64 bits
  if (r > limit) r = limit;
  while (r > 0 && r * r > n) --r;
  while (r < limit && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(i128 n) {
  if (n < 0) return false;
  // Quadratic residues mod 64 reject ~80% of inputs without a sqrt.
  static constexpr std::uint64_t kSquaresMod64 = 0x0202021202030213ULL;
  if (((kSquaresMod64 >> (static_cast<unsigned>(n) & 63)) & 1) == 0) return false;
  u128 r = isqrt(static_cast<u128>(n));
  return r * r == static_cast<u128>(n);
}

std::string to_string_u(u128 m) {
  if (m == 0) return "0";
  std::string s;
  while (m != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string to_string(i128 v) { return v < 0 ? "-" + to_string_u(abs_u128(v)) : to_string_u(abs_u128(v)); }

i128 parse_i128(const std::string& s) {
  if (s.empty()) throw DomainError("empty integer literal");
  std::size_t i = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw DomainError("bad integer literal: " + s);
  i128 v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw DomainError("bad integer literal: " + s);
    v = checked_add(checked_mul(v, 10), neg ? -(s[i] - '0') : (s[i] - '0'));
  }
  return v;
}

}  // namespace hitsieve
