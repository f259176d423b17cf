#pragma once

#include <stdexcept>
#include <string>

namespace braidmon {

// Malformed input: bad strand counts, indices out of range, parse failures.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search or enumeration hit its configured cap. Callers report this; they
// never substitute a guessed answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An identity that must hold did not (internal inconsistency or bad data).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace braidmon
