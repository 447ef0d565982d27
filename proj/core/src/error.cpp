#include "mphide/error.hpp"

namespace mphide {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::SingularZ: return "SingularZ";
    case ErrorKind::ZeroDeterminant: return "ZeroDeterminant";
    case ErrorKind::BadSecretKey: return "BadSecretKey";
    case ErrorKind::MessageTooLarge: return "MessageTooLarge";
    case ErrorKind::PartTooWide: return "PartTooWide";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorKind::KeyMismatch: return "KeyMismatch";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void raise(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace mphide
