#pragma once

#include <stdexcept>
#include <string>

namespace toridim {

enum class ErrorCode {
  invalid_input,
  not_q_cartier,
  size_limit,
  budget_exceeded,
  invariant_violation,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_input: return "INVALID_INPUT";
    case ErrorCode::not_q_cartier: return "NOT_Q_CARTIER";
    case ErrorCode::size_limit: return "SIZE_LIMIT";
    case ErrorCode::budget_exceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::invariant_violation: return "INVARIANT_VIOLATION";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  // The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorCode::invalid_input, what);
}

}  // namespace toridim
