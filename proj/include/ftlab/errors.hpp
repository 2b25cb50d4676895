#pragma once

#include <stdexcept>
#include <string>

namespace ftlab {

// Bad run configuration / invalid arguments to an operation.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numerical failure at run time: gap closure, ODE breakdown,
// branch-tracking ambiguity, non-hermitian input.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ftlab
