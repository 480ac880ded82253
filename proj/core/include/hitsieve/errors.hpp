#pragma once

#include <stdexcept>
#include <string>

namespace hitsieve {

// Argument outside the supported numeric range (x > 1e9, n > 6, ...).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Mathematically invalid input (singular matrix, zero polynomial, P == Q).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A desk-scale work or memory guard was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed-width integer arithmetic would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace hitsieve
