#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zastava {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (unknown type, mismatched rings, bad input).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Division by zero and similar field-level failures.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// A rational function was evaluated at a point where its denominator vanishes.
class PoleError : public ArithmeticError {
 public:
  using ArithmeticError::ArithmeticError;
};

/// A linear system turned out to be inconsistent.
class SolveError : public Error {
 public:
  SolveError(const std::string& what, std::size_t row) : Error(what), row_(row) {}
  /// Index (in the caller's row order) of a row whose residual is nonzero.
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

/// A computation would exceed the configured size limits.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace zastava
