#pragma once

#include <stdexcept>
#include <string>

namespace symdyn {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A presentation or forbidden-word description has no bi-infinite point.
class EmptyShiftError : public Error {
 public:
  using Error::Error;
};

/// A point or word does not belong to the domain it is applied to, or two
/// codes cannot be chained.
class DomainError : public Error {
 public:
  using Error::Error;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// The inputs violate a documented precondition of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A decision procedure was asked about a case it does not decide
/// (e.g. right continuing on a strictly sofic domain).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class DocumentError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace symdyn
