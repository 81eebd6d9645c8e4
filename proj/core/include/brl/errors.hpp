#pragma once

#include <stdexcept>
#include <string>

namespace brl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs outside an operation's domain (maps to CLI exit code 2).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Coincident or nearly coincident arguments of a singular kernel.
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Numerical failure: non-convergence, lost structure (CLI exit code 3).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Perron eigenvector has a vanishing first component.
class NormalizationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Smallest eigenvalue is not simple, so its gradient is undefined.
class SimplicityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// The reduced linear block is numerically singular.
class InvertibilityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Circulant coefficients lack the reflection symmetry.
class SymmetryError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// A scan produced no interior minimum.
class ScanError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class LineSearchError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace brl
