#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sc {

enum class ErrorKind {
  InvalidDims,
  NonFinite,
  NotHermitian,
  NotUnitTrace,
  NotPSD,
  NotNormalized,
  EigenFailure,
  NoConvergence,
  UnsupportedDim,
  SizeGuard,
  Overflow,
  InvalidSplit,
  DimMismatch,
  NotEntangled,
  ZeroOutput,
  UnknownExample,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type. `magnitude` carries the
// worst observed violation for validation errors and is zero otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, double magnitude = 0.0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        magnitude_(magnitude) {}

  ErrorKind kind() const noexcept { return kind_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  ErrorKind kind_;
  double magnitude_;
};

}  // namespace sc
