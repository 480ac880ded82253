#pragma once

#include <cstdint>
#include <vector>

namespace hitsieve {

// Point of P^n(Q) with coprime integer coordinates, first nonzero coordinate positive.
class ProjPoint {
 public:
  // Normalizes; throws DomainError if all coordinates are zero.
  explicit ProjPoint(std::vector<std::int64_t> coords);

  const std::vector<std::int64_t>& coords() const { return c_; }
  std::size_t size() const { return c_.size(); }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::vector<std::int64_t> c_;
};

// Point of Z^n.
struct IntPoint {
  std::vector<std::int64_t> coords;

  std::uint64_t norm() const;
  friend bool operator==(const IntPoint&, const IntPoint&) = default;
  friend auto operator<=>(const IntPoint&, const IntPoint&) = default;
};

std::uint64_t proj_height(const ProjPoint& P);

struct CongruenceSum {
  double sum = 0;
  std::vector<std::uint64_t> primes;  // ascending witnesses
};

// Primes p at which P and Q reduce to the same point of P^n(F_p), i.e. p divides
// every 2x2 minor. Throws DomainError if P == Q or the dimensions differ.
CongruenceSum congruent_prime_sum_proj(const ProjPoint& P, const ProjPoint& Q);

// Primes dividing every coordinate of P - Q. Throws DomainError if P == Q.
CongruenceSum congruent_prime_sum_int(const IntPoint& P, const IntPoint& Q);

// Number of distinct reductions mod p. p must be prime.
std::uint64_t measure_occupancy(const std::vector<ProjPoint>& points, std::uint64_t p);
std::uint64_t measure_occupancy(const std::vector<IntPoint>& points, std::uint64_t p);
std::uint64_t measure_occupancy(const std::vector<std::int64_t>& values, std::uint64_t p);

}  // namespace hitsieve
