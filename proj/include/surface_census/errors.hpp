#ifndef SURFACE_CENSUS_ERRORS_HPP
#define SURFACE_CENSUS_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "surface_census/numeric.hpp"

namespace surface_census {

// Parameter violates a documented precondition (divisibility, ranges, ...).
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive enumeration would exceed the configured cap; carries the
// count the request would have needed.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& msg, Int required)
      : std::runtime_error(msg), required_(std::move(required)) {}
  const Int& required() const { return required_; }

 private:
  Int required_;
};

// The two laws being compared live on different cosets of A_n.
class RegimeMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A vertex count incompatible with a closed orientable surface.
class InconsistentInvariants : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A self-check inside an algorithm failed; signals an implementation bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace surface_census

#endif
