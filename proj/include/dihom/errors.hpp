#pragma once

#include <stdexcept>
#include <string>

namespace dihom {

/// Base of every library failure. `kind()` is the machine-readable class
/// reported by the CLI as {"error": kind, "detail": what}.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(detail), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct InputError : Error {
  explicit InputError(const std::string& detail) : Error("input_error", detail) {}
};

struct SizeError : Error {
  explicit SizeError(const std::string& detail) : Error("size_error", detail) {}
};

struct UnsupportedError : Error {
  explicit UnsupportedError(const std::string& detail) : Error("unsupported", detail) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& detail) : Error("precondition_error", detail) {}
};

/// Raised when a result fails its own post-condition check. Any occurrence is a bug.
struct ContractError : Error {
  explicit ContractError(const std::string& detail) : Error("internal_contract_error", detail) {}
};

struct ParseError : Error {
  ParseError(const std::string& detail, int line, int column)
      : Error("syntax_error", detail + " at line " + std::to_string(line) + ", column " +
                                  std::to_string(column)),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct BracketingError : Error {
  explicit BracketingError(const std::string& detail) : Error("bracketing_error", detail) {}
};

}  // namespace dihom
