#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tutte {

enum class ErrorCode {
  Parse,
  DivisionByZero,
  MissingVariable,
  Singular,
  DimensionMismatch,
  NoSuchEdge,
  LoopContraction,
  InvalidGraph,
  InvalidPartition,
  SharedNonTerminal,
  TerminalMismatch,
  TerminalMissing,
  GroundTooLarge,
  GroundMismatch,
  OutOfRange,
  TooLarge,
  Disconnected,
  RegionPrecondition,
  SingularInverse,
  OnSingularHyperbola,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MissingVariable: return "MissingVariable";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::LoopContraction: return "LoopContraction";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::SharedNonTerminal: return "SharedNonTerminal";
    case ErrorCode::TerminalMismatch: return "TerminalMismatch";
    case ErrorCode::TerminalMissing: return "TerminalMissing";
    case ErrorCode::GroundTooLarge: return "GroundTooLarge";
    case ErrorCode::GroundMismatch: return "GroundMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::RegionPrecondition: return "RegionPrecondition";
    case ErrorCode::SingularInverse: return "SingularInverse";
    case ErrorCode::OnSingularHyperbola: return "OnSingularHyperbola";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tutte
