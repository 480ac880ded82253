#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hitsieve/int_poly.hpp"

namespace hitsieve {

enum class GaloisTag { FullSymmetric, Alternating, OtherTransitive, Reducible, NotSeparable, Undetermined };

const char* to_string(GaloisTag tag);

struct GaloisLabel {
  GaloisTag tag = GaloisTag::Undetermined;
  std::vector<unsigned> partition;  // factor degrees, ascending; Reducible only
  std::string subtype;              // quartic group name (S4, A4, D4, C4, V4), cubic S3/C3

  // "Reducible{1,1,2}", "FullSymmetric", ...
  std::string to_string() const;
  friend bool operator==(const GaloisLabel& a, const GaloisLabel& b) {
    return a.tag == b.tag && a.partition == b.partition;
  }
};

// f(x, t) = x^n + t_1 x^{n-1} + ... + t_n.
IntPoly family_poly(const std::vector<std::int64_t>& t);

// Exact classification for n = 2, 3, 4 (resolvent cubic for quartics).
GaloisLabel galois_quadratic(const std::vector<std::int64_t>& t);
GaloisLabel galois_cubic(const std::vector<std::int64_t>& t);
GaloisLabel galois_quartic(const std::vector<std::int64_t>& t);
// Dispatch on t.size() in {2, 3, 4}; RangeError otherwise.
GaloisLabel galois_exact(const std::vector<std::int64_t>& t);

// Resolvent cubic x^3 - c x^2 + (bd - 4e) x - (b^2 e - 4ce + d^2) of x^4 + b x^3 + c x^2 + d x + e.
IntPoly quartic_resolvent(const IntPoly& f);

// NotSeparable and Reducible exactly; Alternating when f is irreducible with square
// discriminant (G inside A_n); FullSymmetric when the Frobenius cycle shapes at the
// first prime_budget primes p not dividing 2 disc contain an n-cycle, a shape with a
// prime part q in (n/2, n) whose other parts are prime to q, and a shape with a single
// even part equal to 2; Undetermined otherwise. Monic f, n >= 2.
GaloisLabel sn_certificate(const IntPoly& f, unsigned prime_budget, std::uint64_t seed);

// True when f mod p is irreducible for some small odd prime, which proves f
// irreducible over Q. False means "unknown".
bool irreducible_by_reduction(const IntPoly& f);

}  // namespace hitsieve
