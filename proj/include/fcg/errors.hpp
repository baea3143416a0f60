#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fcg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// dimension preconditions (matvec on mismatched lengths etc.)
struct DimensionError : Error {
  using Error::Error;
};

// non-finite entries, bad option values, unsupported ISA requests
struct InvalidValueError : Error {
  using Error::Error;
};

// all rule activations underflowed; the input is outside every rule's support
struct DegenerateActivation : Error {
  using Error::Error;
};

// line search direction with A·d = 0; caller restarts or terminates
struct NullSpaceDirection : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(std::size_t line_no, const std::string& msg)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
  std::size_t line;
};

}  // namespace fcg
