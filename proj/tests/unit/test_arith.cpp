#include <cmath>
#include <random>

#include "doctest.h"
#include "hitsieve/factor.hpp"
#include "hitsieve/primes.hpp"
#include "oracles.hpp"

using namespace hitsieve;

namespace {

IntPoly product(const std::vector<IntPoly>& fs) {
  IntPoly acc{1};
  for (const auto& g : fs) acc = acc * g;
  return acc;
}

}  // namespace

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(10) == PrimeList{2, 3, 5, 7});
  CHECK(primes_up_to(2) == PrimeList{2});
  CHECK(primes_up_to(100).size() == oracle::primes_trial(100).size());
  CHECK(primes_up_to(100).size() == 25);

  const auto fast = primes_up_to(20000);
  const auto slow = oracle::primes_trial(20000);
  REQUIRE(fast.size() == slow.size());
  CHECK(std::equal(fast.begin(), fast.end(), slow.begin()));

  CHECK_THROWS_AS(primes_up_to(1), RangeError);
  CHECK_THROWS_AS(primes_up_to(1'000'000'001ULL), RangeError);
}

TEST_CASE("segmented prime iteration matches trial division across segment edges") {
  std::vector<std::uint64_t> got;
  for_each_prime(262100, 262300, [&](std::uint64_t p) { got.push_back(p); });
  std::vector<std::uint64_t> want;
  for (std::uint64_t n = 262100; n <= 262300; ++n)
    if (oracle::is_prime_trial(n)) want.push_back(n);
  CHECK(got == want);
}

TEST_CASE("is_prime agrees with trial division") {
  for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == oracle::is_prime_trial(n));
  CHECK(is_prime(1'000'000'007ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
  CHECK(is_prime(2305843009213693951ULL));  // 2^61 - 1
  CHECK(next_prime_above(13) == 17);
  CHECK(next_prime_above(2'000'000) == 2'000'003);
}

TEST_CASE("legendre") {
  CHECK(legendre(1, 7) == 1);
  CHECK(legendre(3, 7) == -1);
  CHECK(legendre(-4, 5) == 1);
  CHECK(legendre(14, 7) == 0);
  CHECK_THROWS_AS(legendre(1, 2), DomainError);
  CHECK_THROWS_AS(legendre(1, 9), DomainError);

  for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u, 101u})
    for (long long a = -20; a < 40; ++a) CHECK(legendre(a, p) == oracle::legendre_enum(a, static_cast<long long>(p)));
}

TEST_CASE("legendre is multiplicative for p <= 101") {
  for (std::uint64_t p : primes_up_to(101)) {
    if (p == 2) continue;
    QuadraticCharacter chi(p);
    for (std::uint64_t a = 1; a < p; ++a)
      for (std::uint64_t b = 1; b < p; ++b) {
        REQUIRE(legendre(static_cast<i128>(a * b), p) == legendre(a, p) * legendre(b, p));
        REQUIRE(chi(a) == legendre(a, p));
      }
  }
}

TEST_CASE("fp_factor_shape examples") {
  using Parts = std::vector<std::pair<unsigned, unsigned>>;
  CHECK(fp_factor_shape(FpPoly(5, {1, 0, 1})).parts == Parts{{1, 1}, {1, 1}});
  CHECK(fp_factor_shape(FpPoly(7, {1, 0, 1})).parts == Parts{{2, 1}});
  CHECK(fp_factor_shape(FpPoly(5, {0, 0, 1})).parts == Parts{{1, 2}});
  CHECK(fp_factor_shape(FpPoly(5, {1, 1, 0, 1})).parts == Parts{{3, 1}});
  CHECK_THROWS_AS(fp_factor_shape(FpPoly::zero(5)), DomainError);
  CHECK_THROWS_AS(fp_factor_shape(FpPoly(2, {1, 1, 1})), DomainError);
}

TEST_CASE("squarefree decomposition handles p-th powers") {
  // (x+1)^3 * (x+2) over F_3: derivative of (x+1)^3 vanishes.
  const FpPoly a(3, {1, 1});
  const FpPoly b(3, {2, 1});
  const FpPoly f = a * a * a * b;
  const auto shape = fp_factor_shape(f);
  CHECK(shape.parts == std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {1, 3}});
  const auto full = fp_factor_full(f, 7);
  REQUIRE(full.size() == 2);
  CHECK(full[0].factor == a);
  CHECK(full[0].multiplicity == 3);
  CHECK(full[1].factor == b);
}

TEST_CASE("fp_factor_full examples and cross-oracle with shape") {
  const auto f = fp_factor_full(FpPoly(7, {6, 0, 1}), 42);
  REQUIRE(f.size() == 2);
  CHECK(f[0].factor == FpPoly(7, {1, 1}));
  CHECK(f[1].factor == FpPoly(7, {6, 1}));

  const auto cubic = fp_factor_full(FpPoly(5, {1, 1, 0, 1}), 1);
  REQUIRE(cubic.size() == 1);
  CHECK(cubic[0].factor.degree() == 3);

  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 600; ++iter) {
    const std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7, 11, 13, 101, 1000003}[rng() % 7];
    const int deg = 1 + static_cast<int>(rng() % 9);
    std::vector<std::uint64_t> c(deg + 1);
    for (auto& v : c) v = rng() % p;
    c[deg] = 1;
    // Force some repeated factors.
    FpPoly f(p, c);
    if (iter % 3 == 0) f = f * FpPoly(p, {rng() % p, 1}) * FpPoly(p, {rng() % p, 1});
    const auto shape = fp_factor_shape(f);
    const auto full = fp_factor_full(f, rng());
    std::vector<unsigned> from_full;
    FpPoly prod = FpPoly::one(p);
    for (const auto& [g, m] : full) {
      for (unsigned k = 0; k < m; ++k) {
        from_full.push_back(static_cast<unsigned>(g.degree()));
        prod = prod * g;
      }
    }
    std::sort(from_full.begin(), from_full.end());
    REQUIRE(from_full == shape.degree_multiset());
    REQUIRE(prod == f.monic());
    REQUIRE(shape.total_degree() == static_cast<unsigned>(f.degree()));
    if (p <= 13 && f.degree() <= 6) {
      oracle::Poly of(f.coeffs().begin(), f.coeffs().end());
      REQUIRE(oracle::factor_degrees_trial(of, static_cast<long long>(p)) == shape.degree_multiset());
    }
  }
}

TEST_CASE("fp_factor_full is deterministic for a fixed seed") {
  const FpPoly f(1000003, {5, 0, 0, 0, 0, 0, 0, 0, 1});
  CHECK(fp_factor_full(f, 99) == fp_factor_full(f, 99));
}

TEST_CASE("int_poly_disc examples") {
  CHECK(int_poly_disc(IntPoly{1, -3, 0, 1}) == 81);
  CHECK(int_poly_disc(IntPoly{-1, 0, 1}) == 4);
  CHECK(int_poly_disc(IntPoly{-2, 0, 0, 1}) == -108);
  CHECK(int_poly_disc(IntPoly{0, 0, 1}) == 0);
  CHECK_THROWS_AS(int_poly_disc(IntPoly{1, 1}), DomainError);
  CHECK_THROWS_AS(int_poly_disc(IntPoly{1, 0, 2}), DomainError);
}

TEST_CASE("int_poly_disc matches the closed forms in degrees 2 and 3") {
  for (long long b = -6; b <= 6; ++b)
    for (long long c = -6; c <= 6; ++c) {
      REQUIRE(int_poly_disc(IntPoly{c, b, 1}) == b * b - 4 * c);
      for (long long d = -6; d <= 6; ++d) {
        // x^3 + b x^2 + c x + d
        const long long closed = b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
        REQUIRE(int_poly_disc(IntPoly{d, c, b, 1}) == closed);
      }
    }
}

TEST_CASE("disc vanishes mod p exactly when f is not squarefree mod p") {
  std::mt19937_64 rng(7);
  const auto primes = primes_up_to(50);
  for (int iter = 0; iter < 3000; ++iter) {
    const int deg = 2 + static_cast<int>(rng() % 4);
    std::vector<std::int64_t> tail(deg);
    for (auto& v : tail) v = static_cast<std::int64_t>(rng() % 9) - 4;
    const IntPoly f = IntPoly::monic_from_tail(tail);
    const i128 disc = int_poly_disc(f);
    for (std::uint64_t p : primes) {
      const bool disc_zero = mod_u64(disc, p) == 0;
      REQUIRE(disc_zero == !is_squarefree(f.mod(p)));
    }
  }
}

TEST_CASE("int_poly_factor examples") {
  CHECK(int_poly_factor(IntPoly{-1, 0, 1}, 1) == std::vector<IntPoly>{IntPoly{-1, 1}, IntPoly{1, 1}});
  CHECK(int_poly_factor(IntPoly{0, -1, 0, 1}, 1) ==
        std::vector<IntPoly>{IntPoly{-1, 1}, IntPoly{0, 1}, IntPoly{1, 1}});
  CHECK(int_poly_factor(IntPoly{1, 0, 0, 0, 1}, 1) == std::vector<IntPoly>{IntPoly{1, 0, 0, 0, 1}});
  CHECK(int_poly_factor(IntPoly{1}, 1).empty());
  CHECK_THROWS_AS(int_poly_factor(IntPoly{1, 2}, 1), DomainError);
  CHECK_THROWS_AS(int_poly_factor(IntPoly::monic_from_tail({0, 0, 0, 0, 0, 0, 0, 0, 1}), 1), RangeError);
}

TEST_CASE("x^4 + 1 has no factor of degree <= 2 (exhaustive trial oracle)") {
  // Mignotte: any monic factor has coefficients bounded by 2^4 * sqrt(2) < 23.
  const oracle::Poly f{1, 0, 0, 0, 1};
  for (long long a = -23; a <= 23; ++a) {
    for (long long b = -23; b <= 23; ++b) {
      // Division over Z by x^2 + a x + b: use a huge modulus as exact arithmetic.
      REQUIRE_FALSE(oracle::divides_mod(f, {b, a, 1}, 1'000'000'007LL));
    }
    REQUIRE_FALSE(oracle::divides_mod(f, {a, 1}, 1'000'000'007LL));
  }
}

TEST_CASE("int_poly_factor handles repeated factors") {
  const IntPoly a{-1, 1}, b{2, 0, 1};
  const IntPoly f = a * a * a * b * b;
  const auto fs = int_poly_factor(f, 3);
  CHECK(fs == std::vector<IntPoly>{a, a, a, b, b});
}

TEST_CASE("int_poly_factor: product property over small monic polynomials") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 4000; ++iter) {
    const int deg = 1 + static_cast<int>(rng() % 6);
    std::vector<std::int64_t> tail(deg);
    for (auto& v : tail) v = static_cast<std::int64_t>(rng() % 11) - 5;
    const IntPoly f = IntPoly::monic_from_tail(tail);
    const auto fs = int_poly_factor(f, rng());
    REQUIRE(product(fs) == f);
    for (const auto& g : fs) {
      REQUIRE(g.is_monic());
      // Irreducibility of low-degree factors: degree 2 or 3 factors have no integer root.
      if (g.degree() == 2 || g.degree() == 3) {
        std::vector<long long> c;
        for (i128 v : g.coeffs()) c.push_back(static_cast<long long>(v));
        REQUIRE(oracle::integer_roots(c).empty());
      }
    }
    // Linear factors are exactly the integer roots (with multiplicity).
    std::vector<long long> fc;
    for (i128 v : f.coeffs()) fc.push_back(static_cast<long long>(v));
    std::vector<long long> lin_roots;
    for (const auto& g : fs)
      if (g.degree() == 1) lin_roots.push_back(static_cast<long long>(-g[0]));
    std::sort(lin_roots.begin(), lin_roots.end());
    lin_roots.erase(std::unique(lin_roots.begin(), lin_roots.end()), lin_roots.end());
    REQUIRE(lin_roots == oracle::integer_roots(fc));
  }
}

TEST_CASE("int_poly_factor at the coefficient ceiling") {
  // x^3 - 2^20 x^2 + (2^20 - 3) x - 2^40 + 3 * 2^20, all coefficients within 2^40.
  const std::int64_t big = 1LL << 20;
  const IntPoly f = IntPoly{-big, 1} * IntPoly{big - 3, 0, 1};
  const auto fs = int_poly_factor(f, 5);
  CHECK(product(fs) == f);
  CHECK(fs.size() == 2);
}

TEST_CASE("is_perfect_square") {
  CHECK(is_perfect_square(81));
  CHECK_FALSE(is_perfect_square(-4));
  CHECK(is_perfect_square(0));
  const i128 two62p1 = (i128(1) << 62) + 1;
  CHECK_FALSE(is_perfect_square(two62p1));
  CHECK(oracle::isqrt_binary(static_cast<unsigned __int128>(two62p1)) == (1ULL << 31));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20000; ++i) {
    const unsigned __int128 n = (static_cast<unsigned __int128>(rng()) << 40) ^ rng();
    const auto r = oracle::isqrt_binary(n);
    REQUIRE(isqrt(n) == r);
    REQUIRE(is_perfect_square(static_cast<i128>(n)) == (static_cast<unsigned __int128>(r) * r == n));
    const i128 sq = static_cast<i128>(r) * r;
    REQUIRE(is_perfect_square(sq));
  }
}

TEST_CASE("mertens_sum") {
  CHECK(mertens_sum(2) == doctest::Approx(std::log(2.0) / 2));
  double direct = 0;
  for (auto p : oracle::primes_trial(100)) direct += std::log(double(p)) / double(p);
  CHECK(mertens_sum(100) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(std::abs(mertens_sum(100) - std::log(100.0)) <= 2.0);
  CHECK(std::abs(mertens_sum(1e6) - std::log(1e6)) <= 1.6);
  CHECK_THROWS_AS(mertens_sum(1.5), RangeError);
  CHECK_THROWS_AS(mertens_sum(2e8), RangeError);
}

TEST_CASE("mertens_sum is nondecreasing and tracks log x") {
  double prev = 0;
  for (double x = 100; x <= 1e7; x *= 1.7) {
    const double v = mertens_sum(x);
    REQUIRE(v >= prev);
    REQUIRE(std::abs(v - std::log(x)) <= 2.0);
    prev = v;
  }
}

TEST_CASE("checked arithmetic raises on overflow") {
  const i128 big = i128(1) << 126;
  CHECK_THROWS_AS(checked_mul(big, 4), OverflowError);
  CHECK_THROWS_AS(checked_add(big, big), OverflowError);
  CHECK(to_string(-(i128(1) << 100)) == "-1267650600228229401496703205376");
  CHECK(parse_i128("-42") == -42);
}
