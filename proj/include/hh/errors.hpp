#pragma once

#include <stdexcept>
#include <string>

namespace hh {

/// Base of every error thrown by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad config, C = 0, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Field construction or field compatibility problems.
class FieldError : public Error {
 public:
  using Error::Error;
};

/// Division by zero and friends.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Parameter-list mismatch between ParamPoly operands.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A structural obstruction of the expansion itself, e.g. an inconsistent
/// resonance step that would require logarithmic terms.
class ObstructionError : public Error {
 public:
  using Error::Error;
};

/// An oracle check failed.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hh
