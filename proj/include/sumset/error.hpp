#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sumset {

enum class ErrorCode {
  EmptySet,
  NotStrictlyIncreasing,
  DuplicateElement,
  Parse,
  Overflow,
  InvalidInterval,
  InvalidDilation,
  ElementNotFound,
  WouldBeEmpty,
  NoCanonicalForm,
  InfeasibleH,
  OracleTooLarge,
  RangeTooLarge,
  InapplicableBound,
  InvalidConfig,
  Checkpoint,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto a stable exit status.
class SumsetError : public std::runtime_error {
public:
  SumsetError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace sumset
