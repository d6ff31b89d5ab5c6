#pragma once

#include <stdexcept>
#include <string>

namespace superchar {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A scalar or matrix required to be invertible over Z_n is not a unit.
struct NotAUnit : Error {
  using Error::Error;
};

// Closure generation grew past its element cap.
struct CapExceeded : Error {
  using Error::Error;
};

// A supplied J witness is not symmetric or not invertible.
struct BadWitness : Error {
  using Error::Error;
};

// Family parameters outside the family's domain.
struct BadParams : Error {
  using Error::Error;
};

// Oracle asked for a family it has no closed form for.
struct UnsupportedFamily : Error {
  using Error::Error;
};

// Checked 64-bit arithmetic overflowed; continuing would lose exactness.
struct OverflowError : Error {
  using Error::Error;
};

// Dimension or modulus mismatch between operands.
struct MismatchError : Error {
  using Error::Error;
};

// Malformed input document; line numbers are 1-based.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

}  // namespace superchar
