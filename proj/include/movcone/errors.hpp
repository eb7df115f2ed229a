#pragma once

#include <stdexcept>
#include <string>

namespace movcone {

enum class Errc {
  Parse,
  MalformedSpec,
  AnticanonicalViolation,
  CodimTooLarge,
  AmbientTooSmall,
  Subcritical,
  InvalidArgument,
  NotInJ,
  NonReducedWord,
  NotLorentzian,
  NoAttractingDirection,
  NoGrowth,
  NonConvergent,
  RankNotThree,
  DepthCap,
  Io,
};

const char* errc_name(Errc code);

// All library failures are reported through this type; `code()` tells them apart.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }
private:
  Errc code_;
};

class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& msg)
    : Error(Errc::Parse, "line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + msg),
      line_(line), column_(column), detail_(msg) {}
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& detail() const { return detail_; }
private:
  int line_;
  int column_;
  std::string detail_;
};

} // namespace movcone
