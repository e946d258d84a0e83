#pragma once

#include <stdexcept>
#include <string>

namespace starsdym {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the inputs was violated (bad N, grid too small, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Evaluation was requested at a point where the formulas are singular.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// A numerical self-check failed (rank deficiency, non-convergence, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace starsdym
