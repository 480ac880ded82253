#pragma once

#include <bitset>
#include <cstdint>
#include <vector>

#include "hitsieve/groups.hpp"

namespace hitsieve {

inline constexpr unsigned kMaxSubgroupDegree = 6;

// S_n (n <= 6) indexed by Lehmer rank, with full multiplication and inverse tables.
class SymmetricTable {
 public:
  using Bits = std::bitset<720>;

  explicit SymmetricTable(unsigned n);

  unsigned degree() const { return n_; }
  std::size_t size() const { return perms_.size(); }
  const Perm& perm(std::size_t i) const { return perms_[i]; }
  std::size_t rank(const Perm& p) const;
  std::uint16_t mul(std::size_t a, std::size_t b) const { return mul_[a * perms_.size() + b]; }
  std::uint16_t inv(std::size_t a) const { return inv_[a]; }

  Bits closure(const std::vector<std::uint16_t>& gens) const;
  Bits conjugate(const Bits& h, std::size_t x) const;
  bool transitive(const std::vector<std::uint16_t>& gens) const;
  PermGroup to_group(const Bits& h) const;

 private:
  unsigned n_;
  std::vector<Perm> perms_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
};

// Every subgroup of S_n exactly once, ordered by (order, elements). Throws RangeError if n > 6.
std::vector<PermGroup> all_subgroups(unsigned n);

// |union of transitive subgroups other than A_n, S_n| / n!, over all_subgroups.
Rational transitive_union_ratio(unsigned n);

// Same quantity by an independent sweep: closures <a, b> with a over cycle-type
// representatives and b over S_n, then closed under conjugation.
Rational transitive_union_ratio_pair_sweep(unsigned n);

}  // namespace hitsieve
