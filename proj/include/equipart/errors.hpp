#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace equipart {

// Raised when an input violates an operation's precondition (CLI exit code 1).
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the text-format parsers (CLI exit code 2). `line` is 1-based, 0 when
// the format has no line structure.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Numerical failure, e.g. the eigensolver running out of sweeps.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace equipart
