#ifndef IGT_ERRORS_HPP
#define IGT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace igt {

// Malformed or out-of-range user input (spec strings, patterns, corpus files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public InputError {
 public:
  SyntaxError(std::size_t position, std::string expected, const std::string& text)
      : InputError("syntax error at position " + std::to_string(position) + ": expected " +
                   expected + " in \"" + text + "\""),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

// A group parameter violates its invariant, e.g. Dihedral(7) or SDC(5,3,2).
class ParameterError : public InputError {
 public:
  using InputError::InputError;
};

// A configured size guard was hit. Never a silent truncation.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Size guards. All are configurable from the command line.
struct Limits {
  std::size_t max_group_order = 5000;
  std::size_t max_iso_order = 512;
  std::size_t max_subgroups = 20000;
};

}  // namespace igt

#endif  // IGT_ERRORS_HPP
