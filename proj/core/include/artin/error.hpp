#pragma once

#include <stdexcept>
#include <string>

namespace artin {

enum class ErrorKind {
  Parse,
  InvalidPresentation,
  InvalidArgument,
  HypothesisViolated,
  NotCritical,
  BudgetExceeded,
  BallTooSmall,
  PropertyFalsified,
};

const char* to_string(ErrorKind kind);

/// Every engine failure is reported through this type; `kind` is stable and
/// appears in the CLI's JSON error output.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace artin
