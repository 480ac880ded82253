#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hitsieve/fp_poly.hpp"
#include "hitsieve/int_poly.hpp"

namespace hitsieve {

// Multiset of (degree, multiplicity), one entry per distinct irreducible
// factor, kept sorted ascending.
struct FactorShape {
  std::vector<std::pair<unsigned, unsigned>> parts;

  unsigned total_degree() const;
  // Degrees repeated by multiplicity, ascending: {(1,2),(2,1)} -> {1,1,2}.
  std::vector<unsigned> degree_multiset() const;
  bool squarefree() const;
  std::string to_string() const;
  friend bool operator==(const FactorShape&, const FactorShape&) = default;
};

struct FpFactor {
  FpPoly factor;  // monic irreducible
  unsigned multiplicity;
  friend bool operator==(const FpFactor&, const FpFactor&) = default;
};

// Square-free decomposition of a monic polynomial over F_p: pairs (g_i, i)
// with f = prod g_i^i, each g_i square-free and pairwise coprime.
std::vector<std::pair<FpPoly, unsigned>> squarefree_decomposition(const FpPoly& f);

bool is_squarefree(const FpPoly& f);

// Distinct-degree factorization of a monic square-free polynomial: pairs
// (product of all irreducible factors of degree d, d).
std::vector<std::pair<FpPoly, unsigned>> distinct_degree_factor(const FpPoly& f);

// Irreducible-factor degrees with multiplicities. f nonzero, p odd.
FactorShape fp_factor_shape(const FpPoly& f);

// Complete factorization into monic irreducibles (Cantor-Zassenhaus equal-degree
// splitting driven by a seeded generator). Output sorted canonically.
std::vector<FpFactor> fp_factor_full(const FpPoly& f, std::uint64_t seed);

// disc(f) = (-1)^(n(n-1)/2) Res(f, f') for monic f of degree n >= 2, computed
// by fraction-free elimination of the Sylvester matrix.
i128 int_poly_disc(const IntPoly& f);

// Complete factorization of a monic f over Z into monic irreducibles, repeated
// according to multiplicity, sorted canonically. deg f <= 8, |coeff| <= 2^40.
std::vector<IntPoly> int_poly_factor(const IntPoly& f, std::uint64_t seed);

// Factor degrees of int_poly_factor(f), ascending.
std::vector<unsigned> factor_degrees(const std::vector<IntPoly>& factors);

}  // namespace hitsieve
