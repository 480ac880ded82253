#include "hitsieve/heights.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <unordered_set>

#include "hitsieve/errors.hpp"
#include "hitsieve/int128.hpp"
#include "hitsieve/primes.hpp"

namespace hitsieve {

namespace {

std::uint64_t residue(std::int64_t v, std::uint64_t p) {
  if (p > static_cast<std::uint64_t>(INT64_MAX)) return mod_u64(static_cast<i128>(v), p);
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("measure_occupancy: modulus is not prime");
}

struct VecHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : v) h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }
};

// Distinct residue tuples. Packs a tuple into one word while p^k < 2^64; small
// packed ranges use a bitmap, larger ones a sort of plain integers.
class DistinctResidues {
 public:
  DistinctResidues(std::uint64_t p, std::size_t k, std::size_t expected) : p_(p) {
    u128 span = 1;
    for (std::size_t i = 0; i < k && packed_; ++i) {
      span *= p;
      packed_ = span <= u128(UINT64_MAX);
    }
    if (packed_ && span <= std::max<u128>(1 << 16, 8 * u128(expected)))
      bits_.assign(static_cast<std::size_t>(span), false);
    else if (packed_)
      keys_.reserve(expected);
  }
  void add(const std::vector<std::uint64_t>& r) {
    if (!packed_) {
      wide_.insert(r);
      return;
    }
    std::uint64_t key = 0;
    for (auto v : r) key = key * p_ + v;
    if (bits_.empty()) {
      keys_.push_back(key);
    } else if (!bits_[key]) {
      bits_[key] = true;
      ++marked_;
    }
  }
  std::uint64_t count() {
    if (!packed_) return wide_.size();
    if (!bits_.empty()) return marked_;
    std::sort(keys_.begin(), keys_.end());
    return static_cast<std::uint64_t>(std::unique(keys_.begin(), keys_.end()) - keys_.begin());
  }

 private:
  std::uint64_t p_;
  bool packed_ = true;
  std::vector<bool> bits_;
  std::uint64_t marked_ = 0;
  std::vector<std::uint64_t> keys_;
  std::unordered_set<std::vector<std::uint64_t>, VecHash> wide_;
};

CongruenceSum from_gcd(u128 g) {
  CongruenceSum out;
  out.primes = prime_divisors(g);
  for (auto p : out.primes) out.sum += std::log(static_cast<double>(p));
  return out;
}

}  // namespace

ProjPoint::ProjPoint(std::vector<std::int64_t> coords) : c_(std::move(coords)) {
  std::int64_t g = 0;
  for (auto v : c_) g = std::gcd(g, v);
  if (g == 0) throw DomainError("ProjPoint: all coordinates zero");
  auto lead = std::find_if(c_.begin(), c_.end(), [](std::int64_t v) { return v != 0; });
  if (*lead < 0) g = -g;
  for (auto& v : c_) v /= g;
}

std::uint64_t IntPoint::norm() const {
  std::uint64_t m = 0;
  for (auto v : coords) m = std::max<std::uint64_t>(m, static_cast<std::uint64_t>(abs_u128(v)));
  return m;
}

std::uint64_t proj_height(const ProjPoint& P) {
  std::uint64_t m = 0;
  for (auto v : P.coords()) m = std::max<std::uint64_t>(m, static_cast<std::uint64_t>(abs_u128(v)));
  return m;
}

CongruenceSum congruent_prime_sum_proj(const ProjPoint& P, const ProjPoint& Q) {
  if (P.size() != Q.size()) throw DomainError("congruent_prime_sum_proj: dimension mismatch");
  if (P == Q) throw DomainError("congruent_prime_sum_proj: P == Q");
  const auto& x = P.coords();
  const auto& y = Q.coords();
  u128 g = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const i128 minor = checked_sub(checked_mul(x[i], y[j]), checked_mul(x[j], y[i]));
      g = gcd_i128(static_cast<i128>(g), minor);
    }
  return from_gcd(g);
}

CongruenceSum congruent_prime_sum_int(const IntPoint& P, const IntPoint& Q) {
  if (P.coords.size() != Q.coords.size()) throw DomainError("congruent_prime_sum_int: dimension mismatch");
  if (P == Q) throw DomainError("congruent_prime_sum_int: P == Q");
  u128 g = 0;
  for (std::size_t i = 0; i < P.coords.size(); ++i)
    g = gcd_i128(static_cast<i128>(g), static_cast<i128>(Q.coords[i]) - P.coords[i]);
  return from_gcd(g);
}

std::uint64_t measure_occupancy(const std::vector<ProjPoint>& points, std::uint64_t p) {
  require_prime(p);
  DistinctResidues seen(p, points.empty() ? 0 : points.front().size(), points.size());
  std::vector<std::uint64_t> r;
  for (const auto& P : points) {
    r.clear();
    for (auto v : P.coords()) r.push_back(residue(v, p));
    // gcd = 1 guarantees some coordinate is a unit mod p; scale it to 1.
    auto lead = std::find_if(r.begin(), r.end(), [](std::uint64_t v) { return v != 0; });
    const std::uint64_t inv = invmod(*lead, p);
    for (auto& v : r) v = mulmod(v, inv, p);
    seen.add(r);
  }
  return seen.count();
}

std::uint64_t measure_occupancy(const std::vector<IntPoint>& points, std::uint64_t p) {
  require_prime(p);
  DistinctResidues seen(p, points.empty() ? 0 : points.front().coords.size(), points.size());
  std::vector<std::uint64_t> r;
  for (const auto& P : points) {
    r.clear();
    for (auto v : P.coords) r.push_back(residue(v, p));
    seen.add(r);
  }
  return seen.count();
}

std::uint64_t measure_occupancy(const std::vector<std::int64_t>& values, std::uint64_t p) {
  require_prime(p);
  std::vector<std::uint64_t> r;
  r.reserve(values.size());
  for (auto v : values) r.push_back(residue(v, p));
  std::sort(r.begin(), r.end());
  return static_cast<std::uint64_t>(std::unique(r.begin(), r.end()) - r.begin());
}

}  // namespace hitsieve
