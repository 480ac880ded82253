#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hitsieve/fp_poly.hpp"
#include "hitsieve/int128.hpp"

namespace hitsieve {

// Dense polynomial over Z with 128-bit coefficients, constant term first.
// Every arithmetic operation is overflow-checked.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<std::int64_t> coeffs);
  explicit IntPoly(std::vector<i128> coeffs);

  // x^n + t[0] x^(n-1) + ... + t[n-1]
  static IntPoly monic_from_tail(const std::vector<std::int64_t>& t);

  const std::vector<i128>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  i128 lead() const { return c_.empty() ? 0 : c_.back(); }
  i128 operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  i128 eval(i128 x) const;
  IntPoly derivative() const;
  FpPoly mod(std::uint64_t p) const;

  // Lifts each residue to (-p/2, p/2].
  static IntPoly from_symmetric(const FpPoly& f);

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;
  friend bool operator<(const IntPoly& a, const IntPoly& b);

  // Sup-norm and Euclidean norm of the coefficient vector.
  u128 max_norm() const;
  long double l2_norm() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<i128> c_;
};

// Exact division by a monic divisor. Returns false (and leaves quotient
// unspecified) when g does not divide f, or when a quotient coefficient would
// exceed coeff_bound in absolute value.
bool divide_monic(const IntPoly& f, const IntPoly& g, u128 coeff_bound, IntPoly& quotient);

}  // namespace hitsieve
