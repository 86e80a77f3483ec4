#ifndef LAPINV_ERROR_HPP
#define LAPINV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lapinv {

/// Failure categories raised by the library. The CLI prints `name()` on
/// stderr, so the spelling of each entry is part of the external interface.
enum class ErrorKind {
  InvalidArgument,
  DomainError,
  PoleOfGamma,
  PoleOfDigamma,
  InvalidBeta,
  InvalidOrder,
  RootFindingFailure,
  LeftHalfPlanePole,
  CanonicalCheckFailure,
  CacheCorruption,
  EvaluatorFailure,
  AllPointsFailed,
  FitFailure,
  ZeroExponent,
  LogarithmicFinitePart,
  QuadratureFailure,
  MissingDerivative,
  RankDeficient,
  BelowLandauPole,
  CoefficientPole,
  FitResidualTooLarge,
  ParseError,
  NonMonotoneGrid,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::PoleOfGamma: return "PoleOfGamma";
    case ErrorKind::PoleOfDigamma: return "PoleOfDigamma";
    case ErrorKind::InvalidBeta: return "InvalidBeta";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::RootFindingFailure: return "RootFindingFailure";
    case ErrorKind::LeftHalfPlanePole: return "LeftHalfPlanePole";
    case ErrorKind::CanonicalCheckFailure: return "CanonicalCheckFailure";
    case ErrorKind::CacheCorruption: return "CacheCorruption";
    case ErrorKind::EvaluatorFailure: return "EvaluatorFailure";
    case ErrorKind::AllPointsFailed: return "AllPointsFailed";
    case ErrorKind::FitFailure: return "FitFailure";
    case ErrorKind::ZeroExponent: return "ZeroExponent";
    case ErrorKind::LogarithmicFinitePart: return "LogarithmicFinitePart";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::MissingDerivative: return "MissingDerivative";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::BelowLandauPole: return "BelowLandauPole";
    case ErrorKind::CoefficientPole: return "CoefficientPole";
    case ErrorKind::FitResidualTooLarge: return "FitResidualTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonMonotoneGrid: return "NonMonotoneGrid";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace lapinv

#endif  // LAPINV_ERROR_HPP
