#pragma once

#include <stdexcept>
#include <string>

namespace linkhom {

/// Malformed or out-of-range input (parse errors, bad indices, bad windows).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Algebraic domain error: arity mismatch, division by zero, vanishing
/// denominators after substitution.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check failed (d*d != 0, a non-unique
/// decomposition, ...). Signals a defect rather than bad input.
class ComputationDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace linkhom
