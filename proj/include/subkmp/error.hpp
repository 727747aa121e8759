#pragma once

#include <stdexcept>
#include <string>

namespace subkmp {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorCode : int {
  Infeasible = 1,
  InputError = 2,
  BudgetExceeded = 3,
  InvariantViolation = 4,
  IndexOutOfRange = 5,
  ContractError = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace subkmp
