#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skein {

// Malformed text input. `position` is the 0-based offset of the offending
// character in the input string.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A substitution sent a nonzero denominator to zero, or a series was asked
// to expand at a pole.
class SpecializationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace skein
