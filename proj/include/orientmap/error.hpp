#pragma once

#include <stdexcept>
#include <string>

namespace orientmap {

// Malformed or out-of-range input: bad text, wrong length, value outside [n).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A well-formed argument outside an operation's domain, e.g. asking for a
// non-membership witness of a map that is a member.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A constructed witness failed independent re-validation. Indicates a bug in
// the construction, never a property of the input.
class WitnessInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace orientmap
