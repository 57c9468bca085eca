#pragma once

#include <stdexcept>
#include <string>

namespace sasaki {

// Error taxonomy shared by every layer. Each class maps to one failure mode
// callers can handle separately (the CLI turns CapabilityError into exit 3).

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Division by a jet with zero constant term, singular metric, sqrt of a
// non-positive value and similar.
class SingularValue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A computation needs more derivatives than the jets carry, or a tensor rank
// the routine does not handle.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a proved dichotomy is observed to fail numerically; this
// always indicates a bug or an invalid model.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sasaki
