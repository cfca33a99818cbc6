#pragma once

#include <stdexcept>
#include <string>

namespace tourlim {

/// Input violates a type invariant or an operation precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested computation exceeds the enumeration budget.
class CostGuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A state the theory rules out was reached. Indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed serialized input; the message names the offending field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tourlim
