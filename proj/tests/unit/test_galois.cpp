#include <random>

#include "doctest.h"
#include "hitsieve/census.hpp"
#include "hitsieve/errors.hpp"
#include "hitsieve/factor.hpp"
#include "oracles.hpp"

using namespace hitsieve;

namespace {

GaloisLabel label(GaloisTag tag, std::vector<unsigned> partition = {}) {
  GaloisLabel l;
  l.tag = tag;
  l.partition = std::move(partition);
  return l;
}

// Direct double loop: t1^2 - 4 t2 a perfect square (0 included).
std::uint64_t e2_oracle(std::int64_t B) {
  std::uint64_t c = 0;
  for (std::int64_t a = -B; a <= B; ++a)
    for (std::int64_t b = -B; b <= B; ++b) {
      const std::int64_t D = a * a - 4 * b;
      if (D < 0) continue;
      std::int64_t r = 0;
      while ((r + 1) * (r + 1) <= D) ++r;
      c += r * r == D;
    }
  return c;
}

// Cubic discriminant written out for x^3 + a x^2 + b x + c.
i128 cubic_disc(i128 a, i128 b, i128 c) {
  return a * a * b * b - 4 * b * b * b - 4 * a * a * a * c - 27 * c * c + 18 * a * b * c;
}

bool cubic_has_integer_root(std::int64_t a, std::int64_t b, std::int64_t c) {
  const auto roots = oracle::integer_roots({c, b, a, 1});
  return !roots.empty();
}

}  // namespace

TEST_CASE("galois_cubic examples") {
  CHECK(galois_cubic({0, -3, 1}) == label(GaloisTag::Alternating));
  CHECK(galois_cubic({0, -3, 1}).subtype == "C3");
  CHECK(galois_cubic({0, 0, -2}) == label(GaloisTag::FullSymmetric));
  CHECK(galois_cubic({0, -1, 0}) == label(GaloisTag::Reducible, {1, 1, 1}));
  CHECK(galois_cubic({0, -1, 0}).to_string() == "Reducible{1,1,1}");
  CHECK(galois_cubic({0, 0, 0}) == label(GaloisTag::NotSeparable));
  CHECK(int_poly_disc(family_poly({0, -3, 1})) == 81);
  CHECK(int_poly_disc(family_poly({0, 0, -2})) == -108);
}

TEST_CASE("galois_quartic examples and subtypes") {
  const auto x4p1 = galois_quartic({0, 0, 0, 1});
  CHECK(x4p1.tag == GaloisTag::OtherTransitive);
  CHECK(x4p1.subtype == "V4");
  // x^4 - x = x (x - 1)(x^2 + x + 1): the factorization oracle gives {1,1,2}.
  CHECK(galois_quartic({0, 0, -1, 0}) == label(GaloisTag::Reducible, {1, 1, 2}));
  CHECK(galois_quartic({0, 0, 1, 1}) == label(GaloisTag::FullSymmetric));
  CHECK(galois_quartic({0, 0, 0, -2}).subtype == "D4");
  CHECK(galois_quartic({0, 5, 0, 5}).subtype == "C4");
  CHECK(galois_quartic({0, -4, 0, 2}).subtype == "C4");
  CHECK(galois_quartic({0, 0, 8, 12}) == label(GaloisTag::Alternating));
  CHECK(galois_quartic({0, 0, 8, 12}).subtype == "A4");
  CHECK(galois_quartic({0, -2, 0, 1}) == label(GaloisTag::NotSeparable));
  CHECK(galois_quartic({0, -5, 0, 4}) == label(GaloisTag::Reducible, {1, 1, 1, 1}));
  CHECK(galois_quartic({0, 0, 0, 4}) == label(GaloisTag::Reducible, {2, 2}));
}

TEST_CASE("quartic resolvent closed form") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> u(-30, 30);
  for (int it = 0; it < 200; ++it) {
    const std::int64_t b = u(rng), c = u(rng), d = u(rng), e = u(rng);
    const auto R = quartic_resolvent(family_poly({b, c, d, e}));
    REQUIRE(R.degree() == 3);
    CHECK(R[2] == -c);
    CHECK(R[1] == b * d - 4 * e);
    CHECK(R[0] == -(b * b * e - 4 * c * e + d * d));
    // Resolvent and quartic share the discriminant.
    CHECK(int_poly_disc(R) == int_poly_disc(family_poly({b, c, d, e})));
  }
}

TEST_CASE("sn_certificate examples") {
  CHECK(sn_certificate(family_poly({0, 0, 0, -1, -1}), 20, 0) == label(GaloisTag::FullSymmetric));
  const auto x5m2 = sn_certificate(family_poly({0, 0, 0, 0, -2}), 100, 0);
  CHECK(x5m2.tag != GaloisTag::Alternating);
  CHECK(x5m2.tag != GaloisTag::FullSymmetric);  // the group is the Frobenius group of order 20
  CHECK(int_poly_disc(family_poly({0, 0, 0, 0, -2})) == 50000);
  const auto red = sn_certificate(family_poly({0, 0, 0, -1, 0}), 20, 0);
  CHECK(red.tag == GaloisTag::Reducible);
  CHECK(red.partition == factor_degrees(int_poly_factor(family_poly({0, 0, 0, -1, 0}), 0)));
  CHECK(red == label(GaloisTag::Reducible, {1, 1, 1, 2}));
  CHECK(sn_certificate(family_poly({0, 0, 0, 0, 0}), 20, 0) == label(GaloisTag::NotSeparable));
  // Zero budget never certifies S_n for n >= 4.
  CHECK(sn_certificate(family_poly({0, 0, 0, -1, -1}), 0, 0) == label(GaloisTag::Undetermined));
  // Degree 6 and 7 trinomials with group S_n.
  CHECK(sn_certificate(family_poly({0, 0, 0, 0, -1, -1}), 40, 0) == label(GaloisTag::FullSymmetric));
  CHECK(sn_certificate(family_poly({0, 0, 0, 0, 0, -1, -1}), 40, 0) == label(GaloisTag::FullSymmetric));
}

TEST_CASE("galois_cubic: Alternating iff irreducible with square disc") {
  for (std::int64_t a = -6; a <= 6; ++a)
    for (std::int64_t b = -6; b <= 6; ++b)
      for (std::int64_t c = -6; c <= 6; ++c) {
        const auto l = galois_cubic({a, b, c});
        const i128 D = cubic_disc(a, b, c);
        REQUIRE(int_poly_disc(family_poly({a, b, c})) == D);
        const bool irreducible = !cubic_has_integer_root(a, b, c);
        CHECK((l.tag == GaloisTag::Alternating) == (D != 0 && irreducible && is_perfect_square(D)));
        if (D != 0) CHECK((l.tag == GaloisTag::Reducible) == !irreducible);
      }
}

TEST_CASE("exact labels agree with the factorization cross-check") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> u(-12, 12);
  for (int it = 0; it < 3000; ++it) {
    const std::vector<std::int64_t> t{u(rng), u(rng), u(rng), u(rng)};
    const auto f = family_poly(t);
    const auto l = galois_quartic(t);
    if (int_poly_disc(f) == 0) {
      CHECK(l.tag == GaloisTag::NotSeparable);
      continue;
    }
    const auto degs = factor_degrees(int_poly_factor(f, 0));
    if (degs.size() > 1)
      CHECK(l == label(GaloisTag::Reducible, degs));
    else
      CHECK(l.tag != GaloisTag::Reducible);
  }
}

TEST_CASE("census partition and examples") {
  CHECK(box_size(3, 20) == 41 * 41 * 41);
  CHECK(box_point(2, 1, 0) == std::vector<std::int64_t>{-1, -1});
  CHECK(box_point(2, 1, 8) == std::vector<std::int64_t>{1, 1});
  CHECK_THROWS_AS(box_size(5, 100), ResourceError);
  CHECK_THROWS_AS(count_census(5, 4, CensusMode::Exact, 0, 0), RangeError);

  const auto r3 = count_census(3, 20, CensusMode::Exact, 0, 0);
  CHECK(r3.total() == 41ull * 41 * 41);

  const auto r2 = count_census(2, 100, CensusMode::Exact, 0, 0);
  CHECK(r2.total() == 201ull * 201);
  CHECK(r2.e_n_lower() == e2_oracle(100));
  CHECK(r2.e_n_lower() == r2.e_n_upper());
  CHECK(count_disc_square(2, 100) == e2_oracle(100));

  const auto j = r2.to_json();
  CHECK(j["bound_shape"] == "2B log B");
  CHECK(j["total"] == 201 * 201);
  const auto tab = r2.table();
  CHECK(tab.columns == std::vector<std::string>{"n", "B", "label", "count", "bound_shape", "ratio", "seed", "budget"});
}

TEST_CASE("census is independent of parallelism") {
  const auto a = count_census(4, 3, CensusMode::Exact, 0, 0);
  const auto b = count_census(4, 3, CensusMode::Exact, 0, 0, Parallelism{3, 17});
  CHECK(a.counts == b.counts);
  CHECK(a.subtypes == b.subtypes);
  const auto c = count_census(5, 2, CensusMode::Certificate, 30, 0, Parallelism{2, 5});
  const auto d = count_census(5, 2, CensusMode::Certificate, 30, 0);
  CHECK(c.counts == d.counts);
  CHECK(c.total() == 5ull * 5 * 5 * 5 * 5);
  CHECK(count_disc_square(3, 6, Parallelism{4, 9}) == count_disc_square(3, 6));
}

TEST_CASE("exact and certificate modes agree for n = 4") {
  const auto total = box_size(4, 8);
  for (std::uint64_t i = 0; i < total; i += 3) {
    const auto t = box_point(4, 8, i);
    const auto ex = galois_exact(t);
    const auto ce = classify_point(t, CensusMode::Certificate, 30, 0);
    if (ce.tag == GaloisTag::FullSymmetric) REQUIRE(ex.tag == GaloisTag::FullSymmetric);
    if (ce.tag == GaloisTag::Reducible || ce.tag == GaloisTag::NotSeparable) REQUIRE(ce == ex);
    if (ex.tag == GaloisTag::Reducible || ex.tag == GaloisTag::NotSeparable) REQUIRE(ce == ex);
    // Square disc puts G inside A_4: A4 itself or V4.
    if (ce.tag == GaloisTag::Alternating)
      REQUIRE((ex.tag == GaloisTag::Alternating || (ex.tag == GaloisTag::OtherTransitive && ex.subtype == "V4")));
  }
}

TEST_CASE("count_reducible_by_degree") {
  std::uint64_t roots = 0;
  for (std::int64_t a = -10; a <= 10; ++a)
    for (std::int64_t b = -10; b <= 10; ++b)
      for (std::int64_t c = -10; c <= 10; ++c) roots += cubic_has_integer_root(a, b, c);
  CHECK(count_reducible_by_degree(3, 10, 1) == roots);
  CHECK_THROWS_AS(count_reducible_by_degree(3, 10, 3), RangeError);
  CHECK_THROWS_AS(count_reducible_by_degree(4, 10, 0), RangeError);

  // Quartic degree-2 factors against the census partition.
  const auto r4 = count_census(4, 5, CensusMode::Exact, 0, 0);
  std::uint64_t with_two = 0;
  for (const auto& [name, c] : r4.counts)
    if (name == "Reducible{2,2}" || name == "Reducible{1,1,2}") with_two += c;
  // Non-separable points are outside the reducible labels but may carry a quadratic factor.
  std::uint64_t inseparable_with_two = 0;
  for (std::uint64_t i = 0; i < box_size(4, 5); ++i) {
    const auto f = family_poly(box_point(4, 5, i));
    if (int_poly_disc(f) != 0) continue;
    const auto degs = factor_degrees(int_poly_factor(f, 0));
    inseparable_with_two += std::find(degs.begin(), degs.end(), 2u) != degs.end();
  }
  CHECK(count_reducible_by_degree(4, 5, 2) == with_two + inseparable_with_two);

  for (unsigned n = 2; n <= 4; ++n)
    for (std::int64_t B : {1, 3}) {
      std::uint64_t side = 2 * B + 1, floor = 1;
      for (unsigned k = 1; k < n; ++k) floor *= side;
      CHECK(count_reducible_by_degree(n, B, 1) >= floor);
    }
}

TEST_CASE("count_disc_square against brute discriminant") {
  std::uint64_t c = 0;
  for (std::int64_t a = -8; a <= 8; ++a)
    for (std::int64_t b = -8; b <= 8; ++b)
      for (std::int64_t d = -8; d <= 8; ++d) c += is_perfect_square(cubic_disc(a, b, d));
  CHECK(count_disc_square(3, 8) == c);
}

TEST_CASE("E_n is monotone in B") {
  for (unsigned n = 2; n <= 4; ++n) {
    std::uint64_t prev = 0;
    for (std::int64_t B = 1; B <= (n == 4 ? 4 : 8); ++B) {
      const auto e = count_census(n, B, CensusMode::Exact, 0, 0).e_n_lower();
      CHECK(e >= prev);
      prev = e;
    }
  }
}
