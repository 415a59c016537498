#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fatpoints {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a configuration that breaks a declared rule.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Caller broke an operation's precondition (rank mismatch, unsorted input, ...).
class ContractError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// The input is well formed but no implemented rule covers it.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A consistency check inside the engine failed; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

struct Violation {
  std::string rule;
  std::string detail;
};

inline std::string describe(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.rule + ": " + v.detail;
  }
  return out;
}

}  // namespace fatpoints
