#pragma once

#include <stdexcept>
#include <string>

namespace hopfren {

// Base for everything thrown on purpose by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mixing values that belong to different Hopf instances / computation contexts.
struct ContextError : Error {
  using Error::Error;
};

// Division by zero, inverting a series with non-invertible leading coefficient.
struct SingularError : Error {
  using Error::Error;
};

// Asking for a finite value of a series that still has poles.
struct PoleError : Error {
  using Error::Error;
};

// The truncation window is too small to determine the requested data.
struct TruncationError : Error {
  using Error::Error;
};

// Out-of-range vertex / generator / coefficient index.
struct IndexError : Error {
  using Error::Error;
};

// Subgraph fails the admissibility predicate, or malformed cut.
struct AdmissibilityError : Error {
  using Error::Error;
};

// Geometric configuration degenerate for the requested construction.
struct DegenerateConfigError : Error {
  using Error::Error;
};

// A limit that should be finite has a residual pole.
struct LocalityError : Error {
  using Error::Error;
};

// Insertion result falls outside the closed generator set.
struct UnsupportedInsertionError : Error {
  using Error::Error;
};

// Malformed textual input; `position` is a byte offset into the input.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Violated precondition on a numeric argument.
struct DomainError : Error {
  using Error::Error;
};

}  // namespace hopfren
