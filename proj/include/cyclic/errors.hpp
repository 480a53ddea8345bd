#pragma once

#include <stdexcept>
#include <string>

namespace cyclic {

// Input violates a stated precondition of the operation.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A theorem hypothesis does not hold, so the bound is inapplicable.
class hypothesis_error : public precondition_error {
 public:
  using precondition_error::precondition_error;
};

// Instance exceeds the configured size limit of an exact search.
class guard_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Budget-bounded search exhausted without finding a coloring.
class infeasible_budget : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace cyclic
