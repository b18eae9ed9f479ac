#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvesing {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad polynomial text, unknown variable, wrong arity.
// The CLI maps these to exit status 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// A well-formed request the mathematics refuses (non-reduced curve,
// positive-dimensional scheme, base points, ...). CLI exit status 1.
class MathError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        detail_(message),
        position_(position) {}

  std::size_t position() const { return position_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

class DivisionByZero : public MathError {
 public:
  DivisionByZero() : MathError("division by zero") {}
};

// Mismatched or unsupported algebraic extension.
class ExtensionError : public MathError {
 public:
  using MathError::MathError;
};

class RingMismatch : public InputError {
 public:
  RingMismatch() : InputError("operands live in different polynomial rings") {}
};

}  // namespace curvesing
