#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nonrigid {

enum class ErrorKind {
  NonConvergence,
  InvalidPath,
  StepFailure,
  NonFinite,
  OutOfRange,
  ZeroInput,
  OutsideSector,
  OutsideAnnulus,
  Overflow,
  WrongHalfPlane,
  AlphaTooLarge,
  BranchViolation,
  AnnulusGap,
  ChartUndefined,
  UnknownSuite,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nonrigid
