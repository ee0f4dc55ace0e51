#pragma once

#include <stdexcept>
#include <string>

namespace frobsplit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings with different numbers of variables.
class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// Operands live over different coefficient domains (e.g. F_3 vs F_5).
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or finite criterion would exceed its work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Something the mathematics guarantees did not happen; signals a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace frobsplit
