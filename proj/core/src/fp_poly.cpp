#include "hitsieve/fp_poly.hpp"

#include <algorithm>

#include "hitsieve/errors.hpp"
#include "hitsieve/primes.hpp"

namespace hitsieve {

namespace {

void require_same_field(const FpPoly& a, const FpPoly& b) {
  if (a.modulus() != b.modulus()) throw DomainError("FpPoly: mismatched moduli");
}

inline std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;  // a, b < p < 2^63
  return s >= p ? s - p : s;
}

inline std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

}  // namespace

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw DomainError("FpPoly: modulus must be >= 2");
  for (auto& v : c_) v %= p_;
  trim();
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t FpPoly::eval(std::uint64_t u) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = addm(mulmod(acc, u, p_), *it, p_);
  return acc;
}

FpPoly FpPoly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  const std::uint64_t inv = invmod(lead(), p_);
  FpPoly r = *this;
  for (auto& v : r.c_) v = mulmod(v, inv, p_);
  return r;
}

FpPoly FpPoly::derivative() const {
  FpPoly r;
  r.p_ = p_;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = mulmod(c_[i], i % p_, p_);
  r.trim();
  return r;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  FpPoly r;
  r.p_ = a.p_;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = addm(a[i], b[i], a.p_);
  r.trim();
  return r;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  FpPoly r;
  r.p_ = a.p_;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = subm(a[i], b[i], a.p_);
  r.trim();
  return r;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  FpPoly r;
  r.p_ = a.p_;
  if (a.is_zero() || b.is_zero()) return r;
  const std::uint64_t p = a.p_;
  // Accumulate unreduced 128-bit sums; at most 2^62 * 2^62 * deg terms, so
  // reduce every few terms to stay below 2^128.
  std::vector<u128> acc(a.c_.size() + b.c_.size() - 1, 0);
  const bool small = p < (1ULL << 32);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (small) {
        acc[i + j] += static_cast<u128>(a.c_[i]) * b.c_[j];
      } else {
        acc[i + j] = (acc[i + j] + static_cast<u128>(a.c_[i]) * b.c_[j]) % p;
      }
    }
  }
  r.c_.resize(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) r.c_[k] = static_cast<std::uint64_t>(acc[k] % p);
  r.trim();
  return r;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw DomainError("FpPoly: division by zero polynomial");
  const std::uint64_t p = a.modulus();
  if (a.degree() < b.degree()) return {FpPoly::zero(p), a};
  std::vector<std::uint64_t> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const std::uint64_t inv_lead = invmod(bc.back(), p);
  std::vector<std::uint64_t> quo(rem.size() - db, 0);
  for (std::size_t k = rem.size(); k-- > db;) {
    const std::uint64_t q = mulmod(rem[k], inv_lead, p);
    quo[k - db] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j)
      rem[k - db + j] = subm(rem[k - db + j], mulmod(q, bc[j], p), p);
  }
  rem.resize(db);
  return {FpPoly(p, std::move(quo)), FpPoly(p, std::move(rem))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }
FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }

bool operator<(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string FpPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!s.empty()) s += " + ";
    if (c_[k] != 1 || k == 0) s += std::to_string(c_[k]);
    if (k > 0) {
      if (c_[k] != 1) s += "*";
      s += "x";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s + " (mod " + std::to_string(p_) + ")";
}

FpPoly gcd(FpPoly a, FpPoly b) {
  require_same_field(a, b);
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly powmod(const FpPoly& base, const std::vector<std::uint64_t>& e, const FpPoly& m) {
  FpPoly result = FpPoly::one(m.modulus()) % m;
  FpPoly b = base % m;
  for (std::size_t limb = 0; limb < e.size(); ++limb) {
    std::uint64_t bits = e[limb];
    const bool last = limb + 1 == e.size();
    for (int i = 0; i < 64; ++i) {
      if (bits & 1) result = (result * b) % m;
      bits >>= 1;
      if (last && bits == 0) break;
      b = (b * b) % m;
    }
  }
  return result;
}

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m) {
  return powmod(base, std::vector<std::uint64_t>{e}, m);
}

}  // namespace hitsieve
