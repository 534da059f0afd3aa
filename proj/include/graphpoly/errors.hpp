#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphpoly {

// Base of every error caused by bad user input (files, polynomial text,
// labelings). The CLI maps these to exit status 3.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax error in polynomial text or a structured document. `position` is a
// 0-based character offset into the offending text.
struct ParseError : InputError {
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at column " + std::to_string(position + 1) + ")"),
        position(position) {}
  std::size_t position;
};

struct InvalidGraph : InputError {
  using InputError::InputError;
};

struct InvalidLabeling : InputError {
  using InputError::InputError;
};

// Raised in bounded (64-bit) mode when a natural does not fit.
struct NaturalOverflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// A brute-force routine refused an instance larger than its configured guard.
struct SizeGuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace graphpoly
