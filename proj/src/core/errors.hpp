#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace varembed {

enum class Errc {
  ContextMismatch,
  DivisionByZero,
  NotDivisible,
  IncompletePoint,
  UnknownVariable,
  ParseError,
  InvalidPellPair,
  NotPellCanonical,
  DegenerateConstants,
  SizeLimitExceeded,
  DimensionTooSmall,
  NotASolution,
  ZeroComponent,
  NonconstantTj,
  IncompleteWitness,
  InvalidArgument,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

// Syntax error with 1-based source position.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(Errc::ParseError, what + " (line " + std::to_string(line) +
                                    ", column " + std::to_string(column) + ")"),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

}  // namespace varembed
