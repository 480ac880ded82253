#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hitsieve {

// Dense polynomial over F_p, constant term first. p is an odd or even prime
// below 2^63; arithmetic uses 128-bit products.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);  // reduces and trims

  static FpPoly zero(std::uint64_t p) { return FpPoly(p, {}); }
  static FpPoly one(std::uint64_t p) { return FpPoly(p, {1}); }
  static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

  std::uint64_t modulus() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t eval(std::uint64_t u) const;

  FpPoly monic() const;
  FpPoly derivative() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator%(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator/(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) = default;

  // Canonical order: by degree, then coefficients from the top.
  friend bool operator<(const FpPoly& a, const FpPoly& b);

  std::string to_string() const;

 private:
  void trim();

  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

// Quotient and remainder; b must be nonzero.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);

// Monic gcd (zero if both are zero).
FpPoly gcd(FpPoly a, FpPoly b);

// base^e mod m, with e given as little-endian 64-bit limbs.
FpPoly powmod(const FpPoly& base, const std::vector<std::uint64_t>& e, const FpPoly& m);
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m);

}  // namespace hitsieve
