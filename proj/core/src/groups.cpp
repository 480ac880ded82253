#include "hitsieve/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "hitsieve/errors.hpp"
#include "hitsieve/primes.hpp"

namespace hitsieve {

// ---- Perm ----

Perm::Perm(std::vector<std::uint8_t> images) : img_(std::move(images)) {
  if (img_.size() > kMaxPermDegree) throw RangeError("Perm: degree above 16");
  std::vector<bool> hit(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || hit[v]) throw DomainError("Perm: images do not form a bijection");
    hit[v] = true;
  }
}

Perm Perm::identity(unsigned n) {
  std::vector<std::uint8_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Perm(std::move(v));
}

Perm Perm::from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles) {
  Perm acc = identity(n);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<std::uint8_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    const auto& cyc = *it;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (cyc[i] >= n) throw DomainError("Perm::from_cycles: letter out of range");
      v[cyc[i]] = static_cast<std::uint8_t>(cyc[(i + 1) % cyc.size()]);
    }
    acc = Perm(std::move(v)) * acc;
  }
  return acc;
}

unsigned Perm::fixed_points() const {
  unsigned k = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) k += img_[i] == i;
  return k;
}

std::vector<unsigned> Perm::cycle_type() const {
  std::vector<unsigned> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::uint64_t Perm::key() const {
  std::uint64_t k = 0;
  for (auto v : img_) k = (k << 4) | v;
  return k;
}

std::string Perm::to_string() const {
  std::string s;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    s += '(';
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (s.back() != '(') s += ' ';
      s += std::to_string(j);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw DomainError("Perm: degree mismatch");
  Perm r;
  r.img_.resize(a.img_.size());
  for (std::size_t i = 0; i < r.img_.size(); ++i) r.img_[i] = a.img_[b.img_[i]];
  return r;
}

Perm inverse(const Perm& a) {
  std::vector<std::uint8_t> v(a.degree());
  for (unsigned i = 0; i < a.degree(); ++i) v[a(i)] = static_cast<std::uint8_t>(i);
  return Perm(std::move(v));
}

// ---- Mat2 ----

Mat2 Mat2::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::uint32_t m) {
  if (m < 2 || m > 0xFFFF) throw RangeError("Mat2: modulus must lie in [2, 65535]");
  auto r = [m](std::int64_t v) { return static_cast<std::uint32_t>(((v % m) + m) % m); };
  return Mat2{r(a), r(b), r(c), r(d), m};
}

std::uint32_t Mat2::det() const {
  const std::uint64_t ad = std::uint64_t(a) * d % m;
  const std::uint64_t bc = std::uint64_t(b) * c % m;
  return static_cast<std::uint32_t>((ad + m - bc) % m);
}

Mat2 Mat2::reduce(std::uint32_t k) const {
  if (k < 2 || m % k != 0) throw DomainError("Mat2::reduce: modulus must divide m");
  return Mat2{a % k, b % k, c % k, d % k, k};
}

std::string Mat2::to_string() const {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," + std::to_string(d) +
         "]] mod " + std::to_string(m);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  if (x.m != y.m) throw DomainError("Mat2: modulus mismatch");
  const std::uint64_t m = x.m;
  auto dot = [m](std::uint64_t p, std::uint64_t q, std::uint64_t r, std::uint64_t s) {
    return static_cast<std::uint32_t>((p * q + r * s) % m);
  };
  return Mat2{dot(x.a, y.a, x.b, y.c), dot(x.a, y.b, x.b, y.d), dot(x.c, y.a, x.d, y.c), dot(x.c, y.b, x.d, y.d),
              x.m};
}

Mat2 inverse(const Mat2& x) {
  const std::uint64_t di = invmod(x.det(), x.m);
  const std::uint64_t m = x.m;
  auto s = [&](std::uint64_t v) { return static_cast<std::uint32_t>(v * di % m); };
  return Mat2{s(x.d), s((m - x.b) % m), s((m - x.c) % m), s(x.a), x.m};
}

std::uint64_t ambient_order(const Perm& identity) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= identity.degree(); ++i) f *= i;
  return f;
}

std::uint64_t ambient_order(const Mat2& identity) {
  std::uint64_t m = identity.m, total = 1;
  for (auto p : prime_divisors(m)) {
    std::uint64_t pe = 1;
    while (m % p == 0) {
      m /= p;
      pe *= p;
    }
    const std::uint64_t q = pe / p;
    total *= q * q * q * q * (p * p - 1) * (p * p - p);
  }
  return total;
}

// ---- ExplicitGroup ----

template <class E>
ExplicitGroup<E> ExplicitGroup<E>::generate(const std::vector<E>& gens, const E& identity, std::size_t guard) {
  ExplicitGroup g;
  g.id_ = identity;
  for (const auto& x : gens)
    if (!(x == identity)) g.gens_.push_back(x);
  std::unordered_set<std::uint64_t> seen{identity.key()};
  std::deque<E> queue{identity};
  g.elems_.push_back(identity);
  while (!queue.empty()) {
    const E x = queue.front();
    queue.pop_front();
    for (const auto& s : g.gens_) {
      E y = s * x;
      if (seen.insert(y.key()).second) {
        if (seen.size() > guard) throw ResourceError("closure: group exceeds size guard");
        g.elems_.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  std::sort(g.elems_.begin(), g.elems_.end());
  return g;
}

template <class E>
ExplicitGroup<E>::ExplicitGroup(std::vector<E> elements, E identity) : id_(std::move(identity)) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  elems_ = std::move(elements);
  if (!contains(id_)) throw DomainError("ExplicitGroup: identity missing");
  for (const auto& x : elems_)
    if (!contains(inverse(x))) throw DomainError("ExplicitGroup: not closed under inverse");
  // Greedy generating set; its closure must reproduce the set exactly.
  ExplicitGroup cur = generate({}, id_);
  for (const auto& x : elems_) {
    if (cur.contains(x)) continue;
    gens_.push_back(x);
    try {
      cur = generate(gens_, id_, elems_.size());
    } catch (const ResourceError&) {
      throw DomainError("ExplicitGroup: not closed under composition");
    }
  }
  if (cur.elems_ != elems_) throw DomainError("ExplicitGroup: not closed under composition");
  if (ambient_order(id_) % elems_.size() != 0) throw DomainError("ExplicitGroup: order does not divide ambient order");
}

template <class E>
bool ExplicitGroup<E>::contains(const E& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

template <class E>
bool ExplicitGroup<E>::contains(const ExplicitGroup& h) const {
  return std::includes(elems_.begin(), elems_.end(), h.elems_.begin(), h.elems_.end());
}

template <class E>
bool ExplicitGroup<E>::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
  return true;
}

template <class E>
ExplicitGroup<E> commutator_subgroup(const ExplicitGroup<E>& G) {
  if (G.order() > kCommutatorGuard) throw ResourceError("commutator_subgroup: |G| exceeds 1e6");
  const auto& gens = G.generators();
  std::vector<E> ngens;
  for (const auto& a : gens)
    for (const auto& b : gens) ngens.push_back(a * b * inverse(a) * inverse(b));
  auto N = ExplicitGroup<E>::generate(ngens, G.identity());
  for (bool changed = true; changed;) {
    changed = false;
    const auto current = N.generators();
    for (const auto& t : current)
      for (const auto& g : gens) {
        E c = g * t * inverse(g);
        if (!N.contains(c)) {
          ngens.push_back(std::move(c));
          N = ExplicitGroup<E>::generate(ngens, G.identity());
          changed = true;
        }
      }
  }
  return N;
}

template <class E>
bool is_normal(const ExplicitGroup<E>& G, const ExplicitGroup<E>& N) {
  if (!G.contains(N)) return false;
  for (const auto& g : G.generators())
    for (const auto& t : N.generators())
      if (!N.contains(g * t * inverse(g))) return false;
  return true;
}

template <class E>
std::vector<std::vector<E>> conjugacy_classes(const ExplicitGroup<E>& G) {
  const auto& el = G.elements();
  auto idx = [&](const E& x) { return static_cast<std::size_t>(std::lower_bound(el.begin(), el.end(), x) - el.begin()); };
  std::vector<E> ginv;
  for (const auto& g : G.generators()) ginv.push_back(inverse(g));
  std::vector<bool> seen(el.size(), false);
  std::vector<std::vector<E>> out;
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (seen[i]) continue;
    std::vector<E> cls{el[i]};
    seen[i] = true;
    for (std::size_t q = 0; q < cls.size(); ++q)
      for (std::size_t k = 0; k < ginv.size(); ++k) {
        E y = G.generators()[k] * cls[q] * ginv[k];
        const auto j = idx(y);
        if (!seen[j]) {
          seen[j] = true;
          cls.push_back(std::move(y));
        }
      }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

template <class E>
Rational conjugacy_union_ratio(const ExplicitGroup<E>& G, const ExplicitGroup<E>& M) {
  if (!G.contains(M)) throw DomainError("conjugacy_union_ratio: M is not a subgroup of G");
  std::uint64_t covered = 0;
  for (const auto& cls : conjugacy_classes(G))
    if (std::any_of(cls.begin(), cls.end(), [&](const E& x) { return M.contains(x); })) covered += cls.size();
  return Rational(static_cast<std::int64_t>(covered), static_cast<std::int64_t>(G.order()));
}

template <class E>
std::uint64_t index(const ExplicitGroup<E>& G, const ExplicitGroup<E>& H) {
  if (!G.contains(H)) throw DomainError("index: H is not a subgroup of G");
  return G.order() / H.order();
}

template class ExplicitGroup<Perm>;
template class ExplicitGroup<Mat2>;
template PermGroup commutator_subgroup(const PermGroup&);
template MatGroup commutator_subgroup(const MatGroup&);
template bool is_normal(const PermGroup&, const PermGroup&);
template bool is_normal(const MatGroup&, const MatGroup&);
template std::vector<std::vector<Perm>> conjugacy_classes(const PermGroup&);
template std::vector<std::vector<Mat2>> conjugacy_classes(const MatGroup&);
template Rational conjugacy_union_ratio(const PermGroup&, const PermGroup&);
template Rational conjugacy_union_ratio(const MatGroup&, const MatGroup&);
template std::uint64_t index(const PermGroup&, const PermGroup&);
template std::uint64_t index(const MatGroup&, const MatGroup&);

// ---- concrete groups ----

PermGroup symmetric_group(unsigned n) {
  if (n == 0 || n > kMaxPermDegree) throw RangeError("symmetric_group: n out of range");
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    std::vector<unsigned> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0u);
    gens.push_back(Perm::from_cycles(n, {cyc}));
  }
  return PermGroup::generate(gens, Perm::identity(n));
}

PermGroup alternating_group(unsigned n) {
  if (n == 0 || n > kMaxPermDegree) throw RangeError("alternating_group: n out of range");
  std::vector<Perm> gens;
  for (unsigned i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return PermGroup::generate(gens, Perm::identity(n));
}

PermGroup point_stabilizer(unsigned n, unsigned letter) {
  if (n == 0 || n > kMaxPermDegree || letter >= n) throw RangeError("point_stabilizer: bad arguments");
  std::vector<unsigned> rest;
  for (unsigned i = 0; i < n; ++i)
    if (i != letter) rest.push_back(i);
  std::vector<Perm> gens;
  for (std::size_t i = 0; i + 1 < rest.size(); ++i) gens.push_back(Perm::from_cycles(n, {{rest[i], rest[i + 1]}}));
  return PermGroup::generate(gens, Perm::identity(n));
}

bool is_transitive(const PermGroup& G) {
  const unsigned n = G.identity().degree();
  std::vector<bool> hit(n, false);
  std::vector<unsigned> orbit{0};
  hit[0] = true;
  for (std::size_t q = 0; q < orbit.size(); ++q)
    for (const auto& g : G.generators()) {
      const unsigned j = g(orbit[q]);
      if (!hit[j]) {
        hit[j] = true;
        orbit.push_back(j);
      }
    }
  return orbit.size() == n;
}

Rational derangement_delta(unsigned n) {
  if (n < 1 || n > 20) throw RangeError("derangement_delta: n must lie in [1, 20]");
  std::int64_t fact = 1, der = 1;  // D_0 = 1
  for (unsigned k = 1; k <= n; ++k) {
    fact *= k;
    der = static_cast<std::int64_t>(k) * der + ((k % 2) ? -1 : 1);
  }
  return Rational(fact - der, fact);
}

std::vector<Mat2> diagonal_units(std::uint32_t m) {
  std::vector<Mat2> out;
  for (std::uint32_t u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) out.push_back(Mat2::make(1, 0, 0, u, m));
  return out;
}

MatGroup sl2_group(std::uint32_t m) {
  return MatGroup::generate({Mat2::make(1, 1, 0, 1, m), Mat2::make(1, 0, 1, 1, m)}, Mat2::identity(m));
}

MatGroup gl2_group(std::uint32_t m) {
  std::vector<Mat2> gens{Mat2::make(1, 1, 0, 1, m), Mat2::make(1, 0, 1, 1, m)};
  for (const auto& d : diagonal_units(m)) gens.push_back(d);
  return MatGroup::generate(gens, Mat2::identity(m));
}

MatGroup congruence_kernel(std::uint32_t m, std::uint32_t k) {
  if (k == 0 || m % k != 0) throw DomainError("congruence_kernel: k must divide m");
  std::vector<Mat2> els;
  for (std::uint32_t a = 1 % k; a < m; a += k)
    for (std::uint32_t b = 0; b < m; b += k)
      for (std::uint32_t c = 0; c < m; c += k)
        for (std::uint32_t d = 1 % k; d < m; d += k) {
          const Mat2 x{a, b, c, d, m};
          if (std::gcd(x.det(), m) == 1) els.push_back(x);
        }
  return MatGroup(std::move(els), Mat2::identity(m));
}

MatGroup determinant_one(const MatGroup& G) {
  std::vector<Mat2> els;
  for (const auto& x : G.elements())
    if (x.det() == 1 % x.m) els.push_back(x);
  return MatGroup(std::move(els), G.identity());
}

}  // namespace hitsieve
