#pragma once

#include <stdexcept>
#include <string>

namespace cfk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

// Malformed input to a constructor or operation (bad parameters, invalid complex).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The input is well formed but does not have the structure the computation
// requires (e.g. homology of a knot complex with free rank != 1).
class StructuralError : public Error {
 public:
  using Error::Error;
};

}  // namespace cfk
