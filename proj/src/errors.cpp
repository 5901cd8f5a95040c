#include "sturmian/errors.hpp"

namespace sturmian {

std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NonMinimalPeriod: return "NonMinimalPeriod";
    case ErrorKind::NoDifference: return "NoDifference";
    case ErrorKind::MalformedCuttingSequence: return "MalformedCuttingSequence";
    case ErrorKind::UnlinkViolation: return "UnlinkViolation";
    case ErrorKind::NotPeriodic: return "NotPeriodic";
    case ErrorKind::NotBrokenLineKneading: return "NotBrokenLineKneading";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::BracketingFailed: return "BracketingFailed";
    case ErrorKind::CheckFailed: return "CheckFailed";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::string detail)
    : std::runtime_error(message), kind_(kind), detail_(std::move(detail)) {}

}  // namespace sturmian
