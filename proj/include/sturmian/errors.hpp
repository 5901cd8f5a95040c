#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sturmian {

enum class ErrorKind {
  InvalidArgument,
  ParseError,
  HypothesisViolated,
  NotCoprime,
  NonMinimalPeriod,
  NoDifference,
  MalformedCuttingSequence,
  UnlinkViolation,
  NotPeriodic,
  NotBrokenLineKneading,
  PreconditionUnmet,
  BracketingFailed,
  CheckFailed,
};

std::string_view kind_name(ErrorKind kind) noexcept;

/// Every failure raised by the library. `detail` names the failing
/// constraint (HypothesisViolated) or the offending index (UnlinkViolation).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string detail = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace sturmian
