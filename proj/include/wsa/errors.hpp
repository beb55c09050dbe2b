#pragma once

#include <stdexcept>
#include <string>

namespace wsa {

// Length/shape mismatches and out-of-bounds indices.
struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation asked to run outside its supported regime (non-integer squared
// weights in DP mode, instance too large for enumeration, ...).
struct unsupported_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Iterative numerics failed to converge within the iteration cap.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Config-file syntax problem; carries the 1-based line number.
struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, int line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
        line_number(line) {}
  int line_number;
};

}  // namespace wsa
