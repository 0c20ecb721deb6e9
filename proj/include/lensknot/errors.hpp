#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lensknot {

// Caller violated a precondition (bad modulus, wrong variable tags, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text input could not be parsed. `position` is a 0-based character offset,
// or a 1-based line number when the input is line oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A link diagram whose arc connectivity is malformed.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal identity that must hold did not (exact division left a
// remainder, a symmetry check failed, ...). Signals a bug, not bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A computation exceeded its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lensknot
