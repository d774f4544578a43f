#pragma once

#include <stdexcept>
#include <string>

namespace icstalk {

/// Malformed input: bad shapes, parse failures, out-of-range parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A named mathematical precondition does not hold (e.g. "pairing not skew").
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace icstalk
