#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace unasp {

enum class Errc {
  InvalidInterval,
  Syntax,
  WeightOutOfRange,
  ArityMismatch,
  Grounding,
  UnboundLiteral,
  AnalysisOverflow,
  NoValidAssumptionSet,
  CyclicVpg,
  NonConstantOperand,
  StructuralMismatch,
  BadModel,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidInterval: return "invalid-interval";
    case Errc::Syntax: return "syntax";
    case Errc::WeightOutOfRange: return "weight-out-of-range";
    case Errc::ArityMismatch: return "arity-mismatch";
    case Errc::Grounding: return "grounding";
    case Errc::UnboundLiteral: return "unbound-literal";
    case Errc::AnalysisOverflow: return "analysis-overflow";
    case Errc::NoValidAssumptionSet: return "no-valid-assumption-set";
    case Errc::CyclicVpg: return "cyclic-vpg";
    case Errc::NonConstantOperand: return "non-constant-operand";
    case Errc::StructuralMismatch: return "structural-mismatch";
    case Errc::BadModel: return "bad-model";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Errors raised while reading program text carry a 1-based position.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, std::size_t column, const std::string& msg)
      : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace unasp
