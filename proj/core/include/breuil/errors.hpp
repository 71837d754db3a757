#pragma once

#include <stdexcept>
#include <string>

namespace breuil {

struct BreuilError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad ring parameters, non-irreducible modulus, mismatched fields.
struct ParameterError : BreuilError {
  using BreuilError::BreuilError;
};

// Matrix or element shapes that do not fit the declared modules.
struct ShapeError : BreuilError {
  using BreuilError::BreuilError;
};

// Fil/u^e Fil is not free over k[u]/u^e.
struct NotReduced : BreuilError {
  using BreuilError::BreuilError;
};

// The constant digit word p-1.
struct ExcludedClass : BreuilError {
  using BreuilError::BreuilError;
};

}  // namespace breuil
