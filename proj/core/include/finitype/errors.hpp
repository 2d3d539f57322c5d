#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace finitype {

/// Malformed or inconsistent user input (syntax, dimensions, point not on M).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A configured resource cap was exceeded; the computation is inconclusive.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal identity that must hold by construction failed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace finitype
