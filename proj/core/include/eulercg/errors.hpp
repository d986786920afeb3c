#pragma once

#include <stdexcept>
#include <string>

namespace ecg {

// Base class; the CLI maps each subclass to an exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of candidates.
class BoundExhausted : public Error {
 public:
  using Error::Error;
};

/// Input text or JSON could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// The requested case is outside the implemented scope.
class NotSupported : public Error {
 public:
  using Error::Error;
};

}  // namespace ecg
