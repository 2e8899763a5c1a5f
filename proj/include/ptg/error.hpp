#pragma once

#include <stdexcept>
#include <string>

namespace ptg {

enum class ErrorKind {
  EqualArguments,
  IndexOutOfRange,
  AddressTooShort,
  SearchExceeded,
  OutOfDomain,
  NotPure,
  StrandMismatch,
  EdgeNotPresent,
  LabelNotReachable,
  NotStabilizing,
  EdgeNotInterior,
  NonConvergent,
  DomainViolation,
  MissingImage,
  SyntaxError,
  DegreeMismatch,
  NoGeneratorFound,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ptg
