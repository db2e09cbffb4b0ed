#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace particat {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Size caps and enumeration guards.
class BoundsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Membership query beyond the bound of a generated category.
class UndecidableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ColorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Violated operation precondition (non-projective input, p not in C, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace particat
