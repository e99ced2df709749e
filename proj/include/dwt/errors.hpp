#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dwt {

/// Error taxonomy shared by the library and the CLI. The numeric code is the
/// process exit code contract: 2 usage, 3 scope, 4 numerical invariant,
/// 5 resource budget.
class EngineError : public std::runtime_error {
public:
  EngineError(std::string msg, int exit_code)
      : std::runtime_error(std::move(msg)), code_(exit_code) {}

  int exit_code() const noexcept { return code_; }

private:
  int code_;
};

/// Malformed specs, bad flags, invalid input data.
struct UsageError : EngineError {
  explicit UsageError(const std::string& m) : EngineError(m, 2) {}
};

/// Valid request outside the supported scope of the engine.
struct ScopeError : EngineError {
  explicit ScopeError(const std::string& m) : EngineError(m, 3) {}
};

/// A numerical invariant failed; results are never returned in this state.
struct NumericalError : EngineError {
  explicit NumericalError(const std::string& m) : EngineError(m, 4) {}
};

/// Work or memory budget exceeded.
struct ResourceError : EngineError {
  explicit ResourceError(const std::string& m) : EngineError(m, 5) {}
};

}  // namespace dwt
