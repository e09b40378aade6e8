#pragma once

#include <stdexcept>
#include <string>

namespace subres {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input failed (degree constraints,
/// duplicated roots, poles, wrong set sizes, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Shape mismatch between matrices or vectors.
class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A constructed object does not have the structure the formulas need,
/// e.g. a Macaulay matrix that is not square or a singular V_T.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Raised by exact division when the quotient does not exist in the ring.
class InexactDivision : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace subres
