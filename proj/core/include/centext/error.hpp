#pragma once

#include <stdexcept>
#include <string>

namespace centext {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad table, unknown catalog name, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold (e.g. group not perfect).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A cooperative deadline expired before a search finished.
class DeadlineExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace centext
