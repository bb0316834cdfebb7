#pragma once

#include <stdexcept>
#include <string>

namespace thom {

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact_divide on a non-multiple.
struct NotDivisible : MathError {
  using MathError::MathError;
};

// Arithmetic touched an infinite Euler class where a finite value was needed.
struct InfiniteClass : MathError {
  using MathError::MathError;
};

// Table/grammar content violated an invariant; message names the offending row.
struct ValidationError : MathError {
  using MathError::MathError;
};

// A root-variable polynomial admits no quotient-variable expression.
struct NotSupersymmetric : MathError {
  using MathError::MathError;
};

}  // namespace thom
