#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spgscls {

enum class ErrorCode {
  DimensionMismatch,
  NonPositiveGamma,
  NonFiniteEntry,
  InvalidConfig,
  InfeasibleInput,
  DegeneratePole,
  ZeroDirection,
  SingularSystem,
  NotPositiveDefinite,
  NotStationary,
  NotGloballyCertified,
  DimensionTooLarge,
  UnsupportedDimension,
  DescentViolation,
  ParseError,
  SchemaError,
  IndexOutOfRange,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for errors caused by bad user input (files, flags, malformed
  /// problem data) as opposed to numerical failures.
  bool is_input_error() const noexcept {
    switch (code_) {
      case ErrorCode::DimensionMismatch:
      case ErrorCode::NonPositiveGamma:
      case ErrorCode::NonFiniteEntry:
      case ErrorCode::InvalidConfig:
      case ErrorCode::DimensionTooLarge:
      case ErrorCode::UnsupportedDimension:
      case ErrorCode::ParseError:
      case ErrorCode::SchemaError:
      case ErrorCode::IndexOutOfRange:
      case ErrorCode::IoError:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorCode code_;
};

/// Raised by assert_descent; carries the first violating iteration index.
class DescentViolationError : public Error {
 public:
  DescentViolationError(std::size_t index, const std::string& what)
      : Error(ErrorCode::DescentViolation, what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Raised by the file loaders; carries a 1-based line/column location.
class ParseLocationError : public Error {
 public:
  ParseLocationError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorCode::ParseError, what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace spgscls
