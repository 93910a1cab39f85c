#pragma once

#include <stdexcept>
#include <string>

namespace rifle {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance file could not be parsed; line is 1-based.
struct ParseError : Error {
  ParseError(int line_, const std::string& what_)
      : Error("parse error at line " + std::to_string(line_) + ": " + what_),
        line(line_) {}
  int line;
};

// A brute-force operation was asked to run beyond its size guard.
struct SizeGuardError : Error {
  SizeGuardError(const std::string& op, int n, int guard)
      : Error(op + ": n = " + std::to_string(n) + " exceeds guard " +
              std::to_string(guard)) {}
};

// The solver exceeded its step budget; indicates an implementation bug.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace rifle
