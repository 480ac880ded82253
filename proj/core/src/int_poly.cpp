#include "hitsieve/int_poly.hpp"

#include <algorithm>
#include <cmath>

#include "hitsieve/errors.hpp"

namespace hitsieve {

IntPoly::IntPoly(std::initializer_list<std::int64_t> coeffs) : c_(coeffs.begin(), coeffs.end()) {
  trim();
}

IntPoly::IntPoly(std::vector<i128> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monic_from_tail(const std::vector<std::int64_t>& t) {
  std::vector<i128> c(t.size() + 1);
  c[t.size()] = 1;
  for (std::size_t i = 0; i < t.size(); ++i) c[t.size() - 1 - i] = t[i];
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

i128 IntPoly::eval(i128 x) const {
  i128 acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = checked_add(checked_mul(acc, x), *it);
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<i128> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = checked_mul(c_[i], static_cast<i128>(i));
  return IntPoly(std::move(d));
}

FpPoly IntPoly::mod(std::uint64_t p) const {
  std::vector<std::uint64_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mod_u64(c_[i], p);
  return FpPoly(p, std::move(r));
}

IntPoly IntPoly::from_symmetric(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<i128> c(f.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::uint64_t v = f.coeffs()[i];
    c[i] = v > p / 2 ? static_cast<i128>(v) - static_cast<i128>(p) : static_cast<i128>(v);
  }
  return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<i128> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a[i], b[i]);
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<i128> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_sub(a[i], b[i]);
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<i128> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
  return IntPoly(std::move(c));
}

bool operator<(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

u128 IntPoly::max_norm() const {
  u128 m = 0;
  for (i128 v : c_) m = std::max(m, abs_u128(v));
  return m;
}

long double IntPoly::l2_norm() const {
  long double s = 0;
  for (i128 v : c_) {
    const long double d = static_cast<long double>(v);
    s += d * d;
  }
  return std::sqrt(s);
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const i128 v = c_[k];
    if (v == 0) continue;
    const u128 mag = abs_u128(v);
    if (s.empty()) {
      if (v < 0) s += "-";
    } else {
      s += v < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) s += to_string_u(mag);
    if (k > 0) {
      if (mag != 1) s += "*";
      s += "x";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

bool divide_monic(const IntPoly& f, const IntPoly& g, u128 coeff_bound, IntPoly& quotient) {
  if (!g.is_monic()) throw DomainError("divide_monic: divisor must be monic");
  if (f.degree() < g.degree()) return false;
  std::vector<i128> rem = f.coeffs();
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  std::vector<i128> q(rem.size() - dg, 0);
  try {
    for (std::size_t k = rem.size(); k-- > dg;) {
      const i128 lead = rem[k];
      if (abs_u128(lead) > coeff_bound) return false;
      q[k - dg] = lead;
      if (lead == 0) continue;
      for (std::size_t j = 0; j <= dg; ++j)
        rem[k - dg + j] = checked_sub(rem[k - dg + j], checked_mul(lead, gc[j]));
    }
  } catch (const OverflowError&) {
    return false;
  }
  for (std::size_t i = 0; i < dg; ++i)
    if (rem[i] != 0) return false;
  quotient = IntPoly(std::move(q));
  return true;
}

}  // namespace hitsieve
