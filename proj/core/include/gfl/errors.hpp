#pragma once

#include <stdexcept>
#include <string>

namespace gfl {

// Bad caller input: wrong shapes, invalid partitions, non-prime moduli.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A theorem-backed identity failed to hold. Always a bug somewhere.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A search or enumeration hit its configured bound.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gfl
