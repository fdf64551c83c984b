#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace s1yamabe {

enum class ErrorCode {
  InvalidArgument,
  NonFinite,
  NoConvergence,
  DomainError,
  InvalidBracket,
  Singular,
  NotCoprime,
  GridTooCoarse,
  LimitNotConverged,
  InconsistentRoutes,
  CaseII,
  CaseIII,
  InvalidCase,
  NonPositiveU,
  NotMeanZero,
  ChiNotPositive,
  ChiPositive,
  DegenerateData,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; the code identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace s1yamabe
