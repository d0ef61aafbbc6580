#pragma once

#include <stdexcept>
#include <string>

namespace certrig {

// Precondition on a numeric argument violated (y = 0, a >= b, n < 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed decimal or fraction literal.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iteration that is proven to terminate hit its safety cap.
class NonTerminationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace certrig
