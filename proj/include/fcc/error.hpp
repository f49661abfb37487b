#ifndef FCC_ERROR_HPP
#define FCC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fcc {

enum class ErrorKind {
  ParseError,
  NotAComplex,
  UnknownVertex,
  NotHomogeneous,
  BadColorSet,
  NotFCC,
  MismatchedBase,
  IsCircle,
  NotConnected,
  NotClosed,
  NotSingleClass,
  ConstructionFailed,
  PreconditionFailed,
  NotDim3,
  BadDimension,
  BadSpec,
  TooLarge,
  NotDavisOutput,
  BadDims,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::BadColorSet: return "BadColorSet";
    case ErrorKind::NotFCC: return "NotFCC";
    case ErrorKind::MismatchedBase: return "MismatchedBase";
    case ErrorKind::IsCircle: return "IsCircle";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotSingleClass: return "NotSingleClass";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NotDim3: return "NotDim3";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::BadSpec: return "BadSpec";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotDavisOutput: return "NotDavisOutput";
    case ErrorKind::BadDims: return "BadDims";
  }
  return "Unknown";
}

/// All library failures are reported through this type; `kind()` identifies
/// the failed contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fcc

#endif  // FCC_ERROR_HPP
