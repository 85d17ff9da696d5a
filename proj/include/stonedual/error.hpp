#ifndef STONEDUAL_ERROR_HPP
#define STONEDUAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace stonedual {

/// Input violates a mathematical precondition (alphabet mismatch, incompatible
/// join, non-unit passed where a unit is required, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed literal or file.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input exceeds a configured size cap.
class LimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Two independent computations of the same quantity disagreed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace stonedual

#endif
