#pragma once

#include <stdexcept>
#include <string>

namespace az {

/// Raised when an operation's precondition on its arguments is violated.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the residue-root search when the number of distinct live
/// prefixes exceeds the configured cap. This is not a "no" answer.
class FrontierCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagreed.
class InternalMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace az
