#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace planted {

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  EmptyGraph,
  Disconnected,
  InvalidSpec,
  InvalidArgument,
  ParseError,
  BudgetExceeded,
  ScanBudgetExceeded,
  PatternTooLarge,
  DegenerateQ,
  InvalidMoment,
  TooFewEdges,
  AlphaOutOfRange,
  MissingSigma,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. `code()` identifies the contract
/// violation; budget failures are the two `*BudgetExceeded` codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool is_budget() const noexcept {
    return code_ == ErrorCode::BudgetExceeded || code_ == ErrorCode::ScanBudgetExceeded;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace planted
