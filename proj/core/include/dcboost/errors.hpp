#pragma once

#include <stdexcept>
#include <string>

namespace dcboost {

/// An oracle produced a non-finite value (or a non-finite vector entry).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent solver or problem configuration, detected before a run starts.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quantity that theory guarantees was observed to be violated at run time
/// (typically a mis-declared strong-convexity modulus).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dcboost
