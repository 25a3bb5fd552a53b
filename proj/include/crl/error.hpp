#pragma once

#include <stdexcept>
#include <string>

namespace crl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad partition, unknown variable, out-of-range index.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A configured size or time budget would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Two independent computations of the same quantity disagree.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// The cokernel sheaf D is not known for this partition.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A result that must be a genuine representation came out virtual, or an
// internal invariant (weight symmetry, equivariance) failed.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace crl
