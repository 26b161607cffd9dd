#pragma once

#include <stdexcept>
#include <string>

namespace valzeta {

/// Base for every precondition failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotPrime : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A quantity could not be certified (divisor may vanish, pole nearby).
/// Distinct from DomainError: the input is legal but the enclosure is too
/// coarse to proceed.
class UncertifiedError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroInterval : public UncertifiedError {
 public:
  using UncertifiedError::UncertifiedError;
};

class UncertifiedDivisor : public UncertifiedError {
 public:
  using UncertifiedError::UncertifiedError;
};

class PoleProximity : public UncertifiedError {
 public:
  using UncertifiedError::UncertifiedError;
};

}  // namespace valzeta
