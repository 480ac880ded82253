#include "hitsieve/galois.hpp"

#include <algorithm>

#include "hitsieve/errors.hpp"
#include "hitsieve/factor.hpp"
#include "hitsieve/primes.hpp"

namespace hitsieve {

namespace {

GaloisLabel make(GaloisTag tag, std::string subtype = {}) {
  GaloisLabel l;
  l.tag = tag;
  l.subtype = std::move(subtype);
  return l;
}

GaloisLabel reducible(std::vector<unsigned> degrees) {
  GaloisLabel l;
  l.tag = GaloisTag::Reducible;
  l.partition = std::move(degrees);
  return l;
}

// Integer roots of a monic cubic, ascending with multiplicity collapsed.
std::vector<i128> integer_roots(const IntPoly& f) {
  std::vector<i128> roots;
  const i128 c0 = f[0];
  if (c0 == 0) {
    roots.push_back(0);
    // Remaining roots are roots of f / x.
    std::vector<i128> rest(f.coeffs().begin() + 1, f.coeffs().end());
    IntPoly g(rest);
    if (g.degree() >= 1)
      for (auto r : integer_roots(g))
        if (r != 0) roots.push_back(r);
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  const u128 m = abs_u128(c0);
  for (u128 d = 1; d * d <= m; ++d) {
    if (m % d) continue;
    for (u128 e : {d, m / d})
      for (i128 s : {i128(1), i128(-1)}) {
        const i128 r = s * static_cast<i128>(e);
        if (f.eval(r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<unsigned> full_degrees(const IntPoly& f, std::uint64_t seed) {
  return factor_degrees(int_poly_factor(f, seed));
}

bool is_prime_small(unsigned q) { return q >= 2 && is_prime(q); }

struct JordanWitness {
  bool n_cycle = false;
  bool big_prime = false;
  bool transposition = false;
  bool complete() const { return n_cycle && big_prime && transposition; }
};

void absorb(JordanWitness& w, const std::vector<unsigned>& shape, unsigned n) {
  if (shape.size() == 1 && shape[0] == n) w.n_cycle = true;
  for (unsigned q : shape) {
    if (!(2 * q > n && q < n && is_prime_small(q))) continue;
    bool coprime = true;
    for (unsigned r : shape)
      if (r != q && r % q == 0) coprime = false;
    // A second part equal to q is impossible since 2q > n.
    if (coprime) w.big_prime = true;
  }
  unsigned twos = 0, other_even = 0;
  for (unsigned r : shape) {
    if (r == 2)
      ++twos;
    else if (r % 2 == 0)
      ++other_even;
  }
  if (twos == 1 && other_even == 0) w.transposition = true;
}

}  // namespace

const char* to_string(GaloisTag tag) {
  switch (tag) {
    case GaloisTag::FullSymmetric: return "FullSymmetric";
    case GaloisTag::Alternating: return "Alternating";
    case GaloisTag::OtherTransitive: return "OtherTransitive";
    case GaloisTag::Reducible: return "Reducible";
    case GaloisTag::NotSeparable: return "NotSeparable";
    case GaloisTag::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string GaloisLabel::to_string() const {
  std::string s = hitsieve::to_string(tag);
  if (tag == GaloisTag::Reducible) {
    s += '{';
    for (std::size_t i = 0; i < partition.size(); ++i) s += (i ? "," : "") + std::to_string(partition[i]);
    s += '}';
  }
  return s;
}

IntPoly family_poly(const std::vector<std::int64_t>& t) { return IntPoly::monic_from_tail(t); }

bool irreducible_by_reduction(const IntPoly& f) {
  const int n = f.degree();
  if (n <= 1) return n == 1;
  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
    const auto shape = fp_factor_shape(f.mod(p));
    if (shape.parts.size() == 1 && shape.parts[0].first == static_cast<unsigned>(n) && shape.parts[0].second == 1)
      return true;
  }
  return false;
}

GaloisLabel galois_quadratic(const std::vector<std::int64_t>& t) {
  if (t.size() != 2) throw RangeError("galois_quadratic: expects 2 coefficients");
  const i128 disc = static_cast<i128>(t[0]) * t[0] - 4 * static_cast<i128>(t[1]);
  if (disc == 0) return make(GaloisTag::NotSeparable);
  if (is_perfect_square(disc)) return reducible({1, 1});
  return make(GaloisTag::FullSymmetric, "S2");
}

GaloisLabel galois_cubic(const std::vector<std::int64_t>& t) {
  if (t.size() != 3) throw RangeError("galois_cubic: expects 3 coefficients");
  const IntPoly f = family_poly(t);
  const i128 disc = int_poly_disc(f);
  if (disc == 0) return make(GaloisTag::NotSeparable);
  // A monic cubic is reducible iff it has an integer root.
  if (!integer_roots(f).empty()) return reducible(full_degrees(f, 0));
  return is_perfect_square(disc) ? make(GaloisTag::Alternating, "C3") : make(GaloisTag::FullSymmetric, "S3");
}

IntPoly quartic_resolvent(const IntPoly& f) {
  if (f.degree() != 4 || !f.is_monic()) throw DomainError("quartic_resolvent: expects a monic quartic");
  const i128 b = f[3], c = f[2], d = f[1], e = f[0];
  const i128 c1 = checked_sub(checked_mul(b, d), checked_mul(4, e));
  const i128 c0 = checked_add(checked_sub(checked_mul(checked_mul(b, b), e), checked_mul(checked_mul(4, c), e)),
                              checked_mul(d, d));
  return IntPoly(std::vector<i128>{checked_mul(-1, c0), c1, checked_mul(-1, c), 1});
}

GaloisLabel galois_quartic(const std::vector<std::int64_t>& t) {
  if (t.size() != 4) throw RangeError("galois_quartic: expects 4 coefficients");
  const IntPoly f = family_poly(t);
  const i128 disc = int_poly_disc(f);
  if (disc == 0) return make(GaloisTag::NotSeparable);
  if (!irreducible_by_reduction(f)) {
    auto degs = full_degrees(f, 0);
    if (degs.size() > 1) return reducible(std::move(degs));
  }
  const IntPoly R = quartic_resolvent(f);
  const auto roots = integer_roots(R);
  const bool square = is_perfect_square(disc);
  if (roots.empty()) return square ? make(GaloisTag::Alternating, "A4") : make(GaloisTag::FullSymmetric, "S4");
  if (roots.size() == 3) return make(GaloisTag::OtherTransitive, "V4");
  // Unique rational root r: C4 iff x^2 - r x + e and x^2 + b x + (c - r) split over Q(sqrt disc).
  const i128 r = roots.front();
  const i128 b = f[3], c = f[2], e = f[0];
  auto splits = [&](i128 D) { return D == 0 || is_perfect_square(D) || is_perfect_square(checked_mul(D, disc)); };
  const i128 D1 = checked_sub(checked_mul(r, r), checked_mul(4, e));
  const i128 D2 = checked_sub(checked_mul(b, b), checked_mul(4, checked_sub(c, r)));
  return make(GaloisTag::OtherTransitive, splits(D1) && splits(D2) ? "C4" : "D4");
}

GaloisLabel galois_exact(const std::vector<std::int64_t>& t) {
  switch (t.size()) {
    case 2: return galois_quadratic(t);
    case 3: return galois_cubic(t);
    case 4: return galois_quartic(t);
    default: throw RangeError("galois_exact: degree must be 2, 3 or 4");
  }
}

GaloisLabel sn_certificate(const IntPoly& f, unsigned prime_budget, std::uint64_t seed) {
  const int n = f.degree();
  if (n < 2 || !f.is_monic()) throw DomainError("sn_certificate: expects a monic polynomial of degree >= 2");
  const i128 disc = int_poly_disc(f);
  if (disc == 0) return make(GaloisTag::NotSeparable);
  if (!irreducible_by_reduction(f)) {
    auto degs = full_degrees(f, seed);
    if (degs.size() > 1) return reducible(std::move(degs));
  }
  if (is_perfect_square(disc)) return make(GaloisTag::Alternating);
  // Irreducible with non-square discriminant: exact for n <= 3.
  if (n <= 3) return make(GaloisTag::FullSymmetric);
  JordanWitness w;
  unsigned used = 0;
  for (std::uint64_t p = 3; used < prime_budget; p = next_prime_above(p)) {
    if (mod_u64(disc, p) == 0) continue;
    ++used;
    absorb(w, fp_factor_shape(f.mod(p)).degree_multiset(), static_cast<unsigned>(n));
    if (w.complete()) return make(GaloisTag::FullSymmetric);
  }
  return make(GaloisTag::Undetermined);
}

}  // namespace hitsieve
