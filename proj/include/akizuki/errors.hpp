#pragma once

#include <stdexcept>
#include <string>

namespace akizuki {

enum class Err {
  ZeroInput,
  NotAUnit,
  NotDivisible,
  NotInBaseRing,
  NotInKernel,
  NotInM,
  LevelOutOfRange,
  LevelBudgetExceeded,
  ValuationCapExceeded,
  IndexOutOfRange,
  DimensionMismatch,
  SyntaxError,
  UnknownIndex,
  ConfigError,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::ZeroInput: return "ZeroInput";
    case Err::NotAUnit: return "NotAUnit";
    case Err::NotDivisible: return "NotDivisible";
    case Err::NotInBaseRing: return "NotInBaseRing";
    case Err::NotInKernel: return "NotInKernel";
    case Err::NotInM: return "NotInM";
    case Err::LevelOutOfRange: return "LevelOutOfRange";
    case Err::LevelBudgetExceeded: return "LevelBudgetExceeded";
    case Err::ValuationCapExceeded: return "ValuationCapExceeded";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::SyntaxError: return "SyntaxError";
    case Err::UnknownIndex: return "UnknownIndex";
    case Err::ConfigError: return "ConfigError";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg),
        code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace akizuki
