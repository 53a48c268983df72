#pragma once

#include <stdexcept>
#include <string>

namespace hypergw {

enum class ErrorKind {
  DivByNonUnit,
  BadConstantTerm,
  TruncationMismatch,
  OutOfTruncation,
  NotTFree,
  BadMirrorMap,
  WindowTooSmall,
  NonzeroConstant,
  NotRegularizable,
  PoleTooHigh,
  RegularityViolation,
  MissingColumn,
  InvalidArgument,
  Internal,
};

const char* to_string(ErrorKind kind);

// Every failure in the library is reported through this one exception type;
// callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hypergw
