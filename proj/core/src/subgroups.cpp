#include "hitsieve/subgroups.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "hitsieve/errors.hpp"

namespace hitsieve {

namespace {

using Bits = SymmetricTable::Bits;

struct Record {
  Bits bits;
  std::vector<std::uint16_t> gens;
};

Perm unrank(unsigned n, std::size_t r) {
  std::vector<std::uint8_t> pool(n), out;
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::size_t> fact(n + 1, 1);
  for (unsigned i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  for (unsigned i = n; i > 0; --i) {
    const std::size_t q = r / fact[i - 1];
    r %= fact[i - 1];
    out.push_back(pool[q]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
  }
  return Perm(std::move(out));
}

}  // namespace

SymmetricTable::SymmetricTable(unsigned n) : n_(n) {
  if (n == 0 || n > kMaxSubgroupDegree) throw RangeError("SymmetricTable: n must lie in [1, 6]");
  std::size_t N = 1;
  for (unsigned i = 2; i <= n; ++i) N *= i;
  for (std::size_t r = 0; r < N; ++r) perms_.push_back(unrank(n, r));
  mul_.resize(N * N);
  inv_.resize(N);
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = 0; b < N; ++b) mul_[a * N + b] = static_cast<std::uint16_t>(rank(perms_[a] * perms_[b]));
    inv_[a] = static_cast<std::uint16_t>(rank(inverse(perms_[a])));
  }
}

std::size_t SymmetricTable::rank(const Perm& p) const {
  std::size_t r = 0;
  for (unsigned i = 0; i < n_; ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j < n_; ++j) smaller += p(j) < p(i);
    r = r * (n_ - i) + smaller;
  }
  return r;
}

Bits SymmetricTable::closure(const std::vector<std::uint16_t>& gens) const {
  Bits h;
  std::vector<std::uint16_t> list{0};  // rank 0 is the identity
  h.set(0);
  for (std::size_t q = 0; q < list.size(); ++q)
    for (auto g : gens) {
      const auto y = mul(g, list[q]);
      if (!h.test(y)) {
        h.set(y);
        list.push_back(y);
      }
    }
  return h;
}

Bits SymmetricTable::conjugate(const Bits& h, std::size_t x) const {
  Bits out;
  const auto xi = inv(x);
  for (std::size_t y = 0; y < size(); ++y)
    if (h.test(y)) out.set(mul(mul(x, y), xi));
  return out;
}

bool SymmetricTable::transitive(const std::vector<std::uint16_t>& gens) const {
  std::vector<bool> hit(n_, false);
  std::vector<unsigned> orbit{0};
  hit[0] = true;
  for (std::size_t q = 0; q < orbit.size(); ++q)
    for (auto g : gens) {
      const unsigned j = perms_[g](orbit[q]);
      if (!hit[j]) {
        hit[j] = true;
        orbit.push_back(j);
      }
    }
  return orbit.size() == n_;
}

PermGroup SymmetricTable::to_group(const Bits& h) const {
  std::vector<Perm> els;
  for (std::size_t y = 0; y < size(); ++y)
    if (h.test(y)) els.push_back(perms_[y]);
  return PermGroup(std::move(els), Perm::identity(n_));
}

namespace {

// Subgroup records up to conjugacy are extended by cyclic subgroups until no new
// class appears; each new class is expanded to all its conjugates.
std::vector<Record> enumerate(const SymmetricTable& T) {
  const std::size_t N = T.size();
  std::vector<std::uint16_t> sn_gens;
  if (T.degree() >= 2) {
    std::vector<unsigned> cyc(T.degree());
    std::iota(cyc.begin(), cyc.end(), 0u);
    sn_gens = {static_cast<std::uint16_t>(T.rank(Perm::from_cycles(T.degree(), {{0, 1}}))),
               static_cast<std::uint16_t>(T.rank(Perm::from_cycles(T.degree(), {cyc})))};
  }

  std::unordered_set<Bits> seen_cyclic;
  std::vector<std::uint16_t> cyclic_gens;
  for (std::size_t g = 0; g < N; ++g)
    if (seen_cyclic.insert(T.closure({static_cast<std::uint16_t>(g)})).second)
      cyclic_gens.push_back(static_cast<std::uint16_t>(g));

  std::unordered_set<Bits> all;
  std::vector<Record> out;
  std::vector<Record> reps;

  auto add_class = [&](const Record& r) {
    std::vector<Record> cls{r};
    all.insert(r.bits);
    for (std::size_t q = 0; q < cls.size(); ++q)
      for (auto s : sn_gens) {
        Bits c = T.conjugate(cls[q].bits, s);
        if (all.insert(c).second) {
          Record nr{c, {}};
          for (auto g : cls[q].gens) nr.gens.push_back(T.mul(T.mul(s, g), T.inv(s)));
          cls.push_back(std::move(nr));
        }
      }
    out.insert(out.end(), cls.begin(), cls.end());
    reps.push_back(r);
  };

  add_class(Record{T.closure({}), {}});
  for (std::size_t q = 0; q < reps.size(); ++q) {
    for (auto c : cyclic_gens) {
      if (reps[q].bits.test(c)) continue;
      Record r{{}, reps[q].gens};
      r.gens.push_back(c);
      r.bits = T.closure(r.gens);
      if (!all.count(r.bits)) add_class(r);
    }
  }
  return out;
}

bool is_full_or_alternating(const SymmetricTable& T, const Bits& h) {
  const std::size_t c = h.count();
  if (c == T.size()) return true;
  if (T.degree() < 2 || 2 * c != T.size()) return false;
  // The unique index-2 subgroup of S_n is A_n.
  for (std::size_t y = 0; y < T.size(); ++y)
    if (h.test(y)) {
      const auto ct = T.perm(y).cycle_type();
      unsigned even_cycles = 0;
      for (auto len : ct) even_cycles += (len % 2 == 0);
      if (even_cycles % 2) return false;
    }
  return true;
}

std::vector<std::uint16_t> generators_of(const SymmetricTable& T, const Bits& h) {
  std::vector<std::uint16_t> gens;
  Bits cur = T.closure({});
  for (std::size_t y = 0; y < T.size(); ++y)
    if (h.test(y) && !cur.test(y)) {
      gens.push_back(static_cast<std::uint16_t>(y));
      cur = T.closure(gens);
    }
  return gens;
}

}  // namespace

std::vector<PermGroup> all_subgroups(unsigned n) {
  if (n == 0 || n > kMaxSubgroupDegree) throw RangeError("all_subgroups: n must lie in [1, 6]");
  const SymmetricTable T(n);
  std::vector<PermGroup> out;
  for (const auto& r : enumerate(T)) out.push_back(T.to_group(r.bits));
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

Rational transitive_union_ratio(unsigned n) {
  if (n == 0 || n > kMaxSubgroupDegree) throw RangeError("transitive_union_ratio: n must lie in [1, 6]");
  const SymmetricTable T(n);
  Bits u;
  for (const auto& r : enumerate(T)) {
    if (is_full_or_alternating(T, r.bits)) continue;
    if (T.transitive(generators_of(T, r.bits))) u |= r.bits;
  }
  return Rational(static_cast<std::int64_t>(u.count()), static_cast<std::int64_t>(T.size()));
}

Rational transitive_union_ratio_pair_sweep(unsigned n) {
  if (n == 0 || n > kMaxSubgroupDegree) throw RangeError("transitive_union_ratio_pair_sweep: n must lie in [1, 6]");
  const SymmetricTable T(n);
  // One representative per cycle type.
  std::vector<std::uint16_t> reps;
  {
    std::vector<std::vector<unsigned>> types;
    for (std::size_t y = 0; y < T.size(); ++y) {
      auto ct = T.perm(y).cycle_type();
      if (std::find(types.begin(), types.end(), ct) == types.end()) {
        types.push_back(std::move(ct));
        reps.push_back(static_cast<std::uint16_t>(y));
      }
    }
  }
  Bits u;
  for (auto a : reps)
    for (std::size_t b = 0; b < T.size(); ++b) {
      const std::vector<std::uint16_t> gens{a, static_cast<std::uint16_t>(b)};
      const Bits h = T.closure(gens);
      if (!is_full_or_alternating(T, h) && T.transitive(gens)) u |= h;
    }
  // Close under conjugation: an element is covered iff its cycle type is.
  std::vector<std::vector<unsigned>> covered;
  for (std::size_t y = 0; y < T.size(); ++y)
    if (u.test(y)) covered.push_back(T.perm(y).cycle_type());
  std::size_t count = 0;
  for (std::size_t y = 0; y < T.size(); ++y)
    if (std::find(covered.begin(), covered.end(), T.perm(y).cycle_type()) != covered.end()) ++count;
  return Rational(static_cast<std::int64_t>(count), static_cast<std::int64_t>(T.size()));
}

}  // namespace hitsieve
