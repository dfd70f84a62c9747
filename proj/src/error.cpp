#include "sc/error.hpp"

namespace sc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidDims: return "InvalidDims";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotUnitTrace: return "NotUnitTrace";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::EigenFailure: return "EigenFailure";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::UnsupportedDim: return "UnsupportedDim";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::InvalidSplit: return "InvalidSplit";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::NotEntangled: return "NotEntangled";
    case ErrorKind::ZeroOutput: return "ZeroOutput";
    case ErrorKind::UnknownExample: return "UnknownExample";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace sc
