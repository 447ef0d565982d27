#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mphide {

enum class ErrorKind {
  Parse,
  DivisionByZero,
  NotInvertible,
  DimensionMismatch,
  SingularMatrix,
  NotCoprime,
  BadOrder,
  IndexOutOfRange,
  OutOfRange,
  VerificationFailed,
  SingularZ,
  ZeroDeterminant,
  BadSecretKey,
  MessageTooLarge,
  PartTooWide,
  NotPrime,
  UnsupportedVersion,
  KeyMismatch,
  Io,
};

std::string_view to_string(ErrorKind kind);

// Base for every error raised by the library. The kind drives the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace mphide
