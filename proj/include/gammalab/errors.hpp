#pragma once

#include <stdexcept>
#include <string>

namespace gammalab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class DegreeTooSmall : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class NotDecomposable : public Error {
 public:
  using Error::Error;
};

class NotSemiGammaPositive : public Error {
 public:
  using Error::Error;
};

class TypeDRange : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class NotRealRooted : public Error {
 public:
  using Error::Error;
};

class NotStandard : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant (e.g. a recurrence division left a remainder).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gammalab
