#include <set>

#include "doctest.h"
#include "hitsieve/errors.hpp"
#include "hitsieve/subgroups.hpp"

using namespace hitsieve;

namespace {

template <class E>
ExplicitGroup<E> brute_commutator(const ExplicitGroup<E>& G) {
  std::set<E> comms;
  for (const auto& a : G.elements())
    for (const auto& b : G.elements()) comms.insert(a * b * inverse(a) * inverse(b));
  return closure(std::vector<E>(comms.begin(), comms.end()), G.identity());
}

template <class E>
std::set<E> brute_conjugate_union(const ExplicitGroup<E>& G, const ExplicitGroup<E>& M) {
  std::set<E> u;
  for (const auto& g : G.elements())
    for (const auto& m : M.elements()) u.insert(g * m * inverse(g));
  return u;
}

std::size_t pair_closure_count(unsigned n) {
  const auto S = symmetric_group(n);
  std::set<std::vector<Perm>> found;
  for (const auto& a : S.elements())
    for (const auto& b : S.elements()) found.insert(closure(std::vector<Perm>{a, b}, S.identity()).elements());
  return found.size();
}

}  // namespace

TEST_CASE("Perm basics") {
  const auto t = Perm::from_cycles(3, {{0, 1}});
  const auto c = Perm::from_cycles(3, {{0, 1, 2}});
  CHECK(c(0) == 1);
  CHECK((t * c)(0) == t(c(0)));
  CHECK(inverse(c) * c == Perm::identity(3));
  CHECK(c.to_string() == "(0 1 2)");
  CHECK(Perm::identity(4).to_string() == "()");
  CHECK(Perm::from_cycles(5, {{0, 1}, {2, 3, 4}}).cycle_type() == std::vector<unsigned>{3, 2});
  CHECK_THROWS_AS(Perm({0, 0, 1}), DomainError);
}

TEST_CASE("Mat2 basics") {
  const auto A = Mat2::make(2, 3, 1, 4, 7);
  CHECK(A.det() == 5);
  CHECK(A * inverse(A) == Mat2::identity(7));
  CHECK(inverse(A) * A == Mat2::identity(7));
  CHECK(Mat2::make(-1, 0, 0, 1, 8).a == 7);
  CHECK_THROWS_AS(inverse(Mat2::make(2, 0, 0, 1, 4)), DomainError);
  CHECK(ambient_order(Mat2::identity(2)) == 6);
  CHECK(ambient_order(Mat2::identity(8)) == 1536);
  CHECK(ambient_order(Mat2::identity(12)) == 96 * 48);
}

TEST_CASE("closure examples") {
  const auto S3 = closure(std::vector<Perm>{Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{0, 1, 2}})},
                          Perm::identity(3));
  CHECK(S3.order() == 6);
  CHECK(closure(std::vector<Perm>{Perm::identity(4)}, Perm::identity(4)).order() == 1);
  CHECK(sl2_group(5).order() == 120);
  for (std::uint32_t m : {2u, 3u, 4u, 6u, 8u, 12u}) CHECK(gl2_group(m).order() == ambient_order(Mat2::identity(m)));
}

TEST_CASE("closure is idempotent") {
  for (std::uint32_t m : {3u, 4u, 6u}) {
    const auto G = sl2_group(m);
    CHECK(closure(G.elements(), G.identity()) == G);
  }
  const auto S5 = symmetric_group(5);
  CHECK(closure(S5.elements(), S5.identity()) == S5);
}

TEST_CASE("explicit construction validates group axioms") {
  const auto id = Perm::identity(3);
  CHECK_THROWS_AS(PermGroup({id, Perm::from_cycles(3, {{0, 1}}), Perm::from_cycles(3, {{1, 2}})}, id), DomainError);
  CHECK_THROWS_AS(PermGroup({Perm::from_cycles(3, {{0, 1}})}, id), DomainError);
  const PermGroup ok({id, Perm::from_cycles(3, {{0, 1, 2}}), Perm::from_cycles(3, {{0, 2, 1}})}, id);
  CHECK(ok.order() == 3);
  CHECK(ok == alternating_group(3));
}

TEST_CASE("commutator subgroup examples") {
  const auto S3 = symmetric_group(3);
  const auto D = commutator_subgroup(S3);
  CHECK(D.order() == 3);
  CHECK(D == alternating_group(3));
  const auto C5 = closure(std::vector<Perm>{Perm::from_cycles(5, {{0, 1, 2, 3, 4}})}, Perm::identity(5));
  CHECK(commutator_subgroup(C5).order() == 1);
  const auto G2 = gl2_group(2);
  CHECK(index(sl2_group(2), commutator_subgroup(G2)) == 2);
}

TEST_CASE("commutator subgroup agrees with brute force and is normal with abelian quotient") {
  std::vector<PermGroup> perm_cases{symmetric_group(4), alternating_group(4), point_stabilizer(5), symmetric_group(5)};
  for (const auto& G : perm_cases) {
    const auto D = commutator_subgroup(G);
    CHECK(D == brute_commutator(G));
    CHECK(is_normal(G, D));
  }
  for (std::uint32_t m : {2u, 3u, 4u}) {
    const auto G = gl2_group(m);
    const auto D = commutator_subgroup(G);
    CHECK(D == brute_commutator(G));
    CHECK(is_normal(G, D));
    // G/D abelian: every commutator of generators lies in D.
    for (const auto& a : G.generators())
      for (const auto& b : G.generators()) CHECK(D.contains(a * b * inverse(a) * inverse(b)));
  }
}

TEST_CASE("conjugacy_union_ratio") {
  const auto S3 = symmetric_group(3);
  const auto T = closure(std::vector<Perm>{Perm::from_cycles(3, {{0, 1}})}, Perm::identity(3));
  CHECK(conjugacy_union_ratio(S3, T) == Rational(2, 3));
  CHECK(conjugacy_union_ratio(S3, S3) == Rational(1));
  CHECK(conjugacy_union_ratio(symmetric_group(4), point_stabilizer(4)) == Rational(5, 8));
  CHECK_THROWS_AS(conjugacy_union_ratio(alternating_group(3), T), DomainError);

  const auto S4 = symmetric_group(4);
  for (const auto& M : all_subgroups(4)) {
    const auto u = brute_conjugate_union(S4, M);
    REQUIRE(conjugacy_union_ratio(S4, M) == Rational(static_cast<std::int64_t>(u.size()), 24));
  }
}

TEST_CASE("derangement_delta") {
  CHECK(derangement_delta(3) == Rational(2, 3));
  CHECK(derangement_delta(1) == Rational(1));
  CHECK(derangement_delta(4) == Rational(5, 8));
  CHECK_THROWS_AS(derangement_delta(0), RangeError);
  CHECK_THROWS_AS(derangement_delta(21), RangeError);
  CHECK(derangement_delta(20) > Rational(63, 100));
  for (unsigned n = 2; n <= 7; ++n) {
    const auto Sn = symmetric_group(n);
    std::int64_t fixers = 0;
    for (const auto& g : Sn.elements()) fixers += g.fixed_points() > 0;
    CHECK(derangement_delta(n) == Rational(fixers, static_cast<std::int64_t>(Sn.order())));
    CHECK(derangement_delta(n) == conjugacy_union_ratio(Sn, point_stabilizer(n)));
  }
}

TEST_CASE("all_subgroups counts") {
  CHECK(all_subgroups(1).size() == 1);
  CHECK(all_subgroups(2).size() == 2);
  const auto s3 = all_subgroups(3);
  CHECK(s3.size() == 6);
  std::multiset<std::uint64_t> orders;
  for (const auto& H : s3) orders.insert(H.order());
  CHECK(orders == std::multiset<std::uint64_t>{1, 2, 2, 2, 3, 6});
  CHECK(all_subgroups(4).size() == 30);
  CHECK(all_subgroups(4).size() == pair_closure_count(4));
  CHECK(all_subgroups(5).size() == 156);
  CHECK(all_subgroups(6).size() == 1455);
  CHECK_THROWS_AS(all_subgroups(7), RangeError);
}

TEST_CASE("Jordan: proper subgroups of S_n do not cover S_n by conjugates") {
  for (unsigned n = 2; n <= 5; ++n) {
    const auto Sn = symmetric_group(n);
    for (const auto& M : all_subgroups(n)) {
      const auto r = conjugacy_union_ratio(Sn, M);
      if (M.order() < Sn.order())
        REQUIRE(r < Rational(1));
      else
        REQUIRE(r == Rational(1));
    }
  }
}

TEST_CASE("transitive_union_ratio") {
  CHECK(transitive_union_ratio(3) == Rational(0));
  CHECK(transitive_union_ratio(1) == Rational(0));
  // n = 4: C4, V4, D4 conjugates cover identity, double transpositions, 4-cycles, transpositions.
  CHECK(transitive_union_ratio(4) == Rational(1 + 3 + 6 + 6, 24));
  for (unsigned n = 3; n <= 6; ++n) CHECK(transitive_union_ratio(n) == transitive_union_ratio_pair_sweep(n));
  CHECK(transitive_union_ratio(5) < Rational(1));
  CHECK(transitive_union_ratio(6) == Rational(1));
  CHECK_THROWS_AS(transitive_union_ratio(7), RangeError);
}

TEST_CASE("commutator index 2 in SL2(Z/m)") {
  for (std::uint32_t m : {2u, 4u, 8u, 12u}) {
    const auto G = gl2_group(m);
    CHECK(index(sl2_group(m), commutator_subgroup(G)) == 2);
  }
  CHECK(index(sl2_group(3), commutator_subgroup(gl2_group(3))) == 1);
}

TEST_CASE("level-8 kernel: commutator identity and indices") {
  const auto H = congruence_kernel(8, 2);
  CHECK(H.order() == 256);
  const auto HS = determinant_one(H);
  CHECK(HS.order() == 64);
  const auto D = commutator_subgroup(H);
  CHECK(D == determinant_one(congruence_kernel(8, 4)));
  CHECK(index(HS, D) == 8);
  CHECK(index(gl2_group(8), H) == 6);
  std::vector<Mat2> gens = D.generators();
  for (const auto& u : diagonal_units(8)) gens.push_back(u);
  const auto image = closure(gens, Mat2::identity(8));
  CHECK(index(gl2_group(8), image) == 48);
  CHECK(determinant_one(image) == D);
}
