#pragma once

#include <stdexcept>
#include <string>

namespace lctrs {

struct LctrsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ill-sorted term construction, rule checking, or replacement.
struct SortError : LctrsError {
  explicit SortError(const std::string& msg, int rule_index = -1)
      : LctrsError(msg), rule_index(rule_index) {}
  int rule_index;
};

struct SyntaxError : LctrsError {
  SyntaxError(int line, int col, const std::string& msg)
      : LctrsError("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct UnknownSymbolError : LctrsError {
  explicit UnknownSymbolError(const std::string& name)
      : LctrsError("unknown symbol: " + name), name(name) {}
  std::string name;
};

// evaluate() on a term that is not both ground and logical.
struct NotGroundLogicalError : LctrsError {
  using LctrsError::LctrsError;
};

struct InvalidRedexError : LctrsError {
  using LctrsError::LctrsError;
};

// Bad solver path or other unusable configuration; fatal.
struct ConfigError : LctrsError {
  using LctrsError::LctrsError;
};

struct SolverNotFoundError : ConfigError {
  using ConfigError::ConfigError;
};

}  // namespace lctrs
