#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsc {

/// Malformed textual input (edge lists, MPS, JSON). Carries the 1-based line
/// number when one is known, 0 otherwise.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Invalid arguments to an algorithm (bad budget, pin violation, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Problem exceeds what an in-process routine is sized for.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace qsc
