#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stringy {

// Base class for every error the engines can signal.  The code is a stable
// machine-readable name ("NotKlt", "PoleAtOne", ...) used by the CLI for
// exit-status reporting.
class EngineError : public std::runtime_error {
 public:
  EngineError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define STRINGY_DEFINE_ERROR(Name)                     \
  struct Name : EngineError {                          \
    explicit Name(const std::string& what)             \
        : EngineError(#Name, what) {}                  \
  }

STRINGY_DEFINE_ERROR(NotKlt);
STRINGY_DEFINE_ERROR(PoleAtOne);
STRINGY_DEFINE_ERROR(OutsideSupport);
STRINGY_DEFINE_ERROR(NotASubdivision);
STRINGY_DEFINE_ERROR(NotSmooth);
STRINGY_DEFINE_ERROR(NotPositive);
STRINGY_DEFINE_ERROR(RaysDiffer);
STRINGY_DEFINE_ERROR(BoundExceeded);
STRINGY_DEFINE_ERROR(NotSL);
STRINGY_DEFINE_ERROR(NonIntegralWeight);
STRINGY_DEFINE_ERROR(NotDiagonal);
STRINGY_DEFINE_ERROR(NotAbelian);
STRINGY_DEFINE_ERROR(InternalCheck);

#undef STRINGY_DEFINE_ERROR

// Parse failure in a polynomial string or a JSON input; carries the
// position the scanner stopped at (1-based).
class ParseError : public EngineError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : EngineError("ParseError",
                    what + " (line " + std::to_string(line) + ", column " +
                        std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace stringy
