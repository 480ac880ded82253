#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace hitsieve {

using Rational = boost::rational<std::int64_t>;

inline constexpr std::size_t kClosureGuard = 10'000'000;
inline constexpr std::size_t kCommutatorGuard = 1'000'000;
inline constexpr unsigned kMaxPermDegree = 16;

// Permutation of {0..n-1}; (a * b)(i) = a(b(i)).
class Perm {
 public:
  Perm() = default;
  // Throws DomainError unless images is a bijection; RangeError if n > 16.
  explicit Perm(std::vector<std::uint8_t> images);
  static Perm identity(unsigned n);
  // Product of disjoint or overlapping cycles, applied right to left.
  static Perm from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  unsigned operator()(unsigned i) const { return img_[i]; }
  const std::vector<std::uint8_t>& images() const { return img_; }
  unsigned fixed_points() const;
  // Cycle lengths, descending, including 1-cycles.
  std::vector<unsigned> cycle_type() const;
  std::uint64_t key() const;
  std::string to_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint8_t> img_;
};

Perm inverse(const Perm& a);

// Element of M_2(Z/m), 1 <= m < 2^16, entries reduced.
struct Mat2 {
  std::uint32_t a = 1, b = 0, c = 0, d = 1;
  std::uint32_t m = 2;

  static Mat2 make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::uint32_t m);
  static Mat2 identity(std::uint32_t m) { return Mat2{1 % m, 0, 0, 1 % m, m}; }

  std::uint32_t det() const;
  std::uint32_t trace() const { return (a + d) % m; }
  std::uint64_t key() const {
    return (std::uint64_t(a) << 48) | (std::uint64_t(b) << 32) | (std::uint64_t(c) << 16) | d;
  }
  // Reduction to Z/k for k | m.
  Mat2 reduce(std::uint32_t k) const;
  std::string to_string() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

// Throws DomainError when det is not a unit.
Mat2 inverse(const Mat2& x);

std::uint64_t ambient_order(const Perm& identity);  // n!
std::uint64_t ambient_order(const Mat2& identity);  // |GL_2(Z/m)|

// Finite group stored as a sorted, deduplicated element list.
template <class E>
class ExplicitGroup {
 public:
  // Validates closure, inverses and Lagrange against the ambient order.
  // Throws DomainError on failure.
  ExplicitGroup(std::vector<E> elements, E identity);

  // Subgroup generated by gens (breadth-first). Throws ResourceError past guard.
  static ExplicitGroup generate(const std::vector<E>& gens, const E& identity, std::size_t guard = kClosureGuard);

  const std::vector<E>& elements() const { return elems_; }
  const std::vector<E>& generators() const { return gens_; }
  const E& identity() const { return id_; }
  std::uint64_t order() const { return elems_.size(); }
  bool contains(const E& x) const;
  bool contains(const ExplicitGroup& h) const;
  bool is_abelian() const;

  friend bool operator==(const ExplicitGroup& x, const ExplicitGroup& y) { return x.elems_ == y.elems_; }

 private:
  ExplicitGroup() = default;
  std::vector<E> elems_;
  std::vector<E> gens_;
  E id_;
};

using PermGroup = ExplicitGroup<Perm>;
using MatGroup = ExplicitGroup<Mat2>;

template <class E>
ExplicitGroup<E> closure(const std::vector<E>& gens, const E& identity) {
  return ExplicitGroup<E>::generate(gens, identity);
}

// Normal closure of the commutators of a generating set. Throws ResourceError if |G| > 1e6.
template <class E>
ExplicitGroup<E> commutator_subgroup(const ExplicitGroup<E>& G);

template <class E>
bool is_normal(const ExplicitGroup<E>& G, const ExplicitGroup<E>& N);

// Conjugacy classes, each sorted, ordered by smallest member.
template <class E>
std::vector<std::vector<E>> conjugacy_classes(const ExplicitGroup<E>& G);

// |union of gMg^-1| / |G|. Throws DomainError unless M is a subgroup of G.
template <class E>
Rational conjugacy_union_ratio(const ExplicitGroup<E>& G, const ExplicitGroup<E>& M);

// |G| / |H|. Throws DomainError unless H is a subgroup of G.
template <class E>
std::uint64_t index(const ExplicitGroup<E>& G, const ExplicitGroup<E>& H);

PermGroup symmetric_group(unsigned n);
PermGroup alternating_group(unsigned n);
PermGroup point_stabilizer(unsigned n, unsigned letter = 0);
bool is_transitive(const PermGroup& G);

// 1 - sum_{i=0}^n (-1)^i / i!. Requires 1 <= n <= 20.
Rational derangement_delta(unsigned n);

MatGroup gl2_group(std::uint32_t m);
MatGroup sl2_group(std::uint32_t m);
// {A in GL_2(Z/m) : A = I mod k}, k | m.
MatGroup congruence_kernel(std::uint32_t m, std::uint32_t k);
// {A in G : det A = 1}.
MatGroup determinant_one(const MatGroup& G);
// diag(1, u) for u in (Z/m)^x.
std::vector<Mat2> diagonal_units(std::uint32_t m);

}  // namespace hitsieve
