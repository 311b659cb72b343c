#pragma once

#include <stdexcept>
#include <string>

namespace icfd {

// Error taxonomy mirrors the CLI exit-code contract: parse, validation and
// parameter problems are user errors; budget exhaustion is reported apart
// from a genuine No answer.
struct ParseError : std::runtime_error {
  int line = 0;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace icfd
