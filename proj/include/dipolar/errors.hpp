#pragma once

#include <stdexcept>
#include <string>

namespace dipolar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter record or request violates its documented invariants.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A density matrix (X state or general 4x4) is not a valid quantum state.
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// A logarithm or square root received an argument outside its domain by
/// more than the rounding allowance.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The quantity exists only at zero field.
class UndefinedAtField : public Error {
 public:
  using Error::Error;
};

/// Root search could not find a sign change.
class NoBracket : public Error {
 public:
  using Error::Error;
};

}  // namespace dipolar
