#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lipclass {

// Invalid input value (zero polynomial, constant where a non-constant is
// required, mismatched weights, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// make_algebraic was handed an interval that does not isolate a single root.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal invariant failed; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lipclass
