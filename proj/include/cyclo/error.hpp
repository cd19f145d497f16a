#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was not met by the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A matrix entry outside the digraph alphabet {0, 1, i, -i}.
class InvalidAdjacency : public Error {
 public:
  using Error::Error;
};

class ParamRange : public Error {
 public:
  using Error::Error;
};

/// A root vector whose squared norm is not 2.
class BadRoot : public Error {
 public:
  using Error::Error;
};

class NotAdjacencyClass : public Error {
 public:
  using Error::Error;
};

/// A search was asked to run beyond its supported size.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotInTables : public Error {
 public:
  using Error::Error;
};

/// Raised when an exhaustive check contradicts a proven structural result;
/// always indicates a bug somewhere in the pipeline.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure (e.g. a characteristic polynomial coefficient
/// that is not a rational integer).
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclo
