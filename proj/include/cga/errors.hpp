#pragma once

#include <stdexcept>
#include <string>

namespace cga {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: unknown generator index, grade out of range,
// zero normal, NaN float input.
class InputError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

// Symbolic multivector whose A*rev(A) is not a scalar; the linear-solve
// path is only available for numeric backends.
class UnsupportedSymbolicInverse : public Error {
 public:
  using Error::Error;
};

class InexactDivision : public Error {
 public:
  using Error::Error;
};

class BackendMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace cga
