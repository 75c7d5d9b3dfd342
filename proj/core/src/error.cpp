#include "nonrigid/error.hpp"

namespace nonrigid {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::InvalidPath: return "InvalidPath";
    case ErrorKind::StepFailure: return "StepFailure";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::OutsideSector: return "OutsideSector";
    case ErrorKind::OutsideAnnulus: return "OutsideAnnulus";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::WrongHalfPlane: return "WrongHalfPlane";
    case ErrorKind::AlphaTooLarge: return "AlphaTooLarge";
    case ErrorKind::BranchViolation: return "BranchViolation";
    case ErrorKind::AnnulusGap: return "AnnulusGap";
    case ErrorKind::ChartUndefined: return "ChartUndefined";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace nonrigid
