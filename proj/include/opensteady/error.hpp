#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opensteady {

enum class ErrorKind {
  NotSquare,
  NotHermitian,
  NegativeEigenvalue,
  SingularMatrix,
  DimensionMismatch,
  NonUniqueSteadyState,
  InvalidState,
  NotConverged,
  NonpositiveFrequency,
  InvalidParams,
  AllRatesZero,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind; the
/// CLI prints error_name(kind) on standard error.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonUniqueSteadyState: return "NonUniqueSteadyState";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::NonpositiveFrequency: return "NonpositiveFrequency";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::AllRatesZero: return "AllRatesZero";
  }
  return "Unknown";
}

}  // namespace opensteady
