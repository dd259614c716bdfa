#pragma once

#include <stdexcept>
#include <string>

namespace orbitsep {

// Caller misuse: mixed coefficient fields, malformed selections, empty word
// in a non-monoid, and similar contract violations. Maps to CLI exit 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Syntax or validation failure while reading a system file or expression.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

// A prime-field reduction hit a denominator divisible by the modulus.
// Callers retry with another prime.
struct BadPrimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A randomized search ran out of candidates; retry with a new seed or
// switch to exact mode.
struct RetryableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace orbitsep
