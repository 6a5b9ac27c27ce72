#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace xform {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  SizeMismatch,
  Singular,
  NotSquarefree,
  RootSearchExhausted,
  NotCoprime,
  NotMinpolyFactorization,
  WrongMinpoly,
  ReducibleQuadratic,
  NonNegativeDiscriminant,
  NoApplicableCase,
  WrongView,
  ParseError,
  InvalidArgument,
};

constexpr std::string_view kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::RootSearchExhausted: return "RootSearchExhausted";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotMinpolyFactorization: return "NotMinpolyFactorization";
    case ErrorKind::WrongMinpoly: return "WrongMinpoly";
    case ErrorKind::ReducibleQuadratic: return "ReducibleQuadratic";
    case ErrorKind::NonNegativeDiscriminant: return "NonNegativeDiscriminant";
    case ErrorKind::NoApplicableCase: return "NoApplicableCase";
    case ErrorKind::WrongView: return "WrongView";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace xform
