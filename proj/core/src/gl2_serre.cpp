#include "hitsieve/gl2_serre.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "hitsieve/errors.hpp"
#include "hitsieve/primes.hpp"

namespace hitsieve {

namespace {

void require_ell(std::uint32_t ell) {
  if (ell < 5 || !is_prime(ell)) throw DomainError("gl2-serre: ell must be a prime >= 5");
}

// counts[t * ell + d] for all matrices over F_ell.
const std::vector<std::uint32_t>& trace_det_table(std::uint32_t ell) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<std::vector<std::uint32_t>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[ell];
  if (!slot) {
    auto t = std::make_unique<std::vector<std::uint32_t>>(std::size_t(ell) * ell, 0);
    for (std::uint32_t a = 0; a < ell; ++a)
      for (std::uint32_t d = 0; d < ell; ++d) {
        const std::uint32_t tr = (a + d) % ell;
        const std::uint32_t ad = a * d % ell;
        for (std::uint32_t b = 0; b < ell; ++b)
          for (std::uint32_t c = 0; c < ell; ++c) {
            const std::uint32_t det = (ad + ell - b * c % ell) % ell;
            ++(*t)[std::size_t(tr) * ell + det];
          }
      }
    slot = std::move(t);
  }
  return *slot;
}

std::uint32_t mat_index(const Mat2& x, std::uint32_t ell) { return x.a + ell * (x.b + ell * (x.c + ell * x.d)); }

Mat2 random_unit_matrix(std::uint32_t ell, std::mt19937_64& rng) {
  for (;;) {
    const Mat2 x{std::uint32_t(rng() % ell), std::uint32_t(rng() % ell), std::uint32_t(rng() % ell),
                 std::uint32_t(rng() % ell), ell};
    if (x.det() != 0) return x;
  }
}

std::uint32_t random_unit(std::uint32_t ell, std::mt19937_64& rng) { return 1 + std::uint32_t(rng() % (ell - 1)); }

std::uint32_t least_nonsquare(std::uint32_t ell) {
  for (std::uint32_t e = 2;; ++e)
    if (legendre(e, ell) == -1) return e;
}

}  // namespace

SerreClass classify_trace_det(std::uint32_t t, std::uint32_t d, std::uint32_t ell) {
  SerreClass s;
  const std::uint64_t L = ell;
  const std::uint64_t disc = (std::uint64_t(t) * t % L + 4 * (L - d % L)) % L;
  if (t % L != 0 && disc != 0) {
    const int chi = legendre(static_cast<i128>(disc), ell);
    s.in_C1 = chi == 1;
    s.in_C2 = chi == -1;
  }
  const std::uint64_t u = std::uint64_t(t) * t % L * invmod(d % L, L) % L;
  const bool excluded = u == 0 || u == 1 || u == 2 || u == 4;
  const std::uint64_t quad = (u * u % L + L - 3 * u % L + 1) % L;
  s.in_C3 = !excluded && quad != 0;
  return s;
}

SerreClass classify(const Mat2& A) {
  require_ell(A.m);
  if (A.det() == 0) throw DomainError("classify: singular matrix");
  return classify_trace_det(A.trace(), A.det(), A.m);
}

std::uint64_t count_fixed_trace_det(std::uint32_t ell, std::uint32_t d, std::uint32_t t) {
  require_ell(ell);
  if (ell > kMaxBruteEll) throw RangeError("count_fixed_trace_det: enumeration limited to ell <= 31");
  if (d % ell == 0) throw DomainError("count_fixed_trace_det: d must be nonzero");
  return trace_det_table(ell)[std::size_t(t % ell) * ell + d % ell];
}

std::uint64_t count_fixed_trace_det_formula(std::uint32_t ell, std::uint32_t d, std::uint32_t t) {
  require_ell(ell);
  if (d % ell == 0) throw DomainError("count_fixed_trace_det_formula: d must be nonzero");
  const i128 disc = static_cast<i128>(t) * t - 4 * static_cast<i128>(d);
  const std::int64_t eps = legendre(disc, ell);
  return static_cast<std::uint64_t>(std::int64_t(ell) * ell + eps * std::int64_t(ell));
}

Rational class_proportion(std::uint32_t ell, std::uint32_t d, int i, CountPath path) {
  require_ell(ell);
  if (i < 1 || i > 3) throw DomainError("class_proportion: i must be 1, 2 or 3");
  if (d % ell == 0) throw DomainError("class_proportion: d must be nonzero");
  const bool brute = path == CountPath::Brute || (path == CountPath::Auto && ell <= kMaxBruteEll);
  std::uint64_t hits = 0;
  for (std::uint32_t t = 0; t < ell; ++t) {
    const auto s = classify_trace_det(t, d, ell);
    const bool in = (i == 1 && s.in_C1) || (i == 2 && s.in_C2) || (i == 3 && s.in_C3);
    if (in) hits += brute ? count_fixed_trace_det(ell, d, t) : count_fixed_trace_det_formula(ell, d, t);
  }
  const std::int64_t sl2 = std::int64_t(ell) * (std::int64_t(ell) * ell - 1);
  return Rational(static_cast<std::int64_t>(hits), sl2);
}

GeneratedSubgroup scan_generated(const std::vector<Mat2>& gens, std::uint32_t ell) {
  require_ell(ell);
  if (ell > kMaxBruteEll) throw ResourceError("scan_generated: closure guard is ell <= 31");
  for (const auto& g : gens)
    if (g.m != ell || g.det() == 0) throw DomainError("scan_generated: generator not in GL_2(F_ell)");
  const std::size_t N = std::size_t(ell) * ell * ell * ell;
  std::vector<bool> seen(N, false);
  std::vector<Mat2> list{Mat2::identity(ell)};
  seen[mat_index(list[0], ell)] = true;
  for (std::size_t q = 0; q < list.size(); ++q)
    for (const auto& g : gens) {
      const Mat2 y = g * list[q];
      const auto k = mat_index(y, ell);
      if (!seen[k]) {
        seen[k] = true;
        list.push_back(y);
      }
    }
  GeneratedSubgroup out;
  out.order = list.size();
  for (const auto& x : list) {
    if (x.det() == 1) ++out.det_one;
    const auto s = classify_trace_det(x.trace(), x.det(), ell);
    out.meets[0] |= s.in_C1;
    out.meets[1] |= s.in_C2;
    out.meets[2] |= s.in_C3;
  }
  out.contains_sl2 = out.det_one == std::uint64_t(ell) * (std::uint64_t(ell) * ell - 1);
  return out;
}

bool contains_sl2(const std::vector<Mat2>& gens, std::uint32_t ell) { return scan_generated(gens, ell).contains_sl2; }

std::vector<Mat2> random_serre_generators(std::uint32_t ell, std::mt19937_64& rng) {
  require_ell(ell);
  const std::uint32_t eps = least_nonsquare(ell);
  const unsigned count = 1 + unsigned(rng() % 3);
  const unsigned family = unsigned(rng() % 4);
  std::vector<Mat2> gens;
  for (unsigned k = 0; k < count; ++k) {
    switch (family) {
      case 0:
        gens.push_back(random_unit_matrix(ell, rng));
        break;
      case 1:  // Borel
        gens.push_back(Mat2{random_unit(ell, rng), std::uint32_t(rng() % ell), 0, random_unit(ell, rng), ell});
        break;
      case 2:  // split Cartan normalizer
        if (rng() % 2)
          gens.push_back(Mat2{random_unit(ell, rng), 0, 0, random_unit(ell, rng), ell});
        else
          gens.push_back(Mat2{0, random_unit(ell, rng), random_unit(ell, rng), 0, ell});
        break;
      default: {  // nonsplit Cartan normalizer: a + b sqrt(eps), and conjugation
        if (rng() % 3 == 0) {
          gens.push_back(Mat2::make(1, 0, 0, -1, ell));
        } else {
          for (;;) {
            const std::uint32_t a = std::uint32_t(rng() % ell), b = std::uint32_t(rng() % ell);
            const Mat2 x{a, std::uint32_t(std::uint64_t(b) * eps % ell), b, a, ell};
            if (x.det() != 0) {
              gens.push_back(x);
              break;
            }
          }
        }
      }
    }
  }
  // Conjugate the whole set by a random element so subgroups are not always in standard position.
  const Mat2 g = random_unit_matrix(ell, rng);
  const Mat2 gi = inverse(g);
  for (auto& x : gens) x = g * x * gi;
  return gens;
}

}  // namespace hitsieve
