#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ellambda {

enum class ErrorKind {
  InvalidArgument,
  RealRootOfNonReal,
  Overflow,
  EscalationExhausted,
  MixedField,
  SlowConvergence,
  DegenerateLambda,
  PoleAtMinusOne,
  ConsistencyFailure,
  NonRealResult,
  DomainRestriction,
  ParseError,
  DuplicateRecord,
  UnknownD,
  UnknownSuite,
  Io,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& source, int line, int column, const std::string& what)
      : Error(ErrorKind::ParseError,
              source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace ellambda
