#pragma once

#include <stdexcept>
#include <string>

namespace heckepos {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unsupported Coxeter type, rank out of range, malformed option.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed the configured memory budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always signals a bug.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// Fixed-width coefficient overflow.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// A polynomial is not a product of the admissible cyclotomic polynomials.
class NotCyclotomicProduct : public Error {
 public:
  using Error::Error;
};

/// Malformed user input (element words, flags).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace heckepos
