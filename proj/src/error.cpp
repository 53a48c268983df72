#include "hypergw/error.hpp"

namespace hypergw {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivByNonUnit: return "DivByNonUnit";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::TruncationMismatch: return "TruncationMismatch";
    case ErrorKind::OutOfTruncation: return "OutOfTruncation";
    case ErrorKind::NotTFree: return "NotTFree";
    case ErrorKind::BadMirrorMap: return "BadMirrorMap";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::NonzeroConstant: return "NonzeroConstant";
    case ErrorKind::NotRegularizable: return "NotRegularizable";
    case ErrorKind::PoleTooHigh: return "PoleTooHigh";
    case ErrorKind::RegularityViolation: return "RegularityViolation";
    case ErrorKind::MissingColumn: return "MissingColumn";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace hypergw
