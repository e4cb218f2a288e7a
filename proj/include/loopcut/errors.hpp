#pragma once

#include <stdexcept>
#include <string>

namespace loopcut {

/// Thrown when a cycle exists that no finite-weight vertex can break.
class UnbreakableCycleError : public std::runtime_error {
 public:
  explicit UnbreakableCycleError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Thrown when an exact solve exceeds its vertex or node budget.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Input-format error carrying a 1-based line number (0 = whole file).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace loopcut
