#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arbor {

enum class ErrorCode {
  SelfLoop,
  VertexOutOfRange,
  RootQuery,
  UnknownArc,
  NotParallel,
  PreconditionSourceTarget,
  PreconditionNewSourceTarget,
  NotSquare,
  NonNumericWeight,
  RootHasInArcs,
  TooLarge,
  NoRootArc,
  NotRooted,
  ExpansionTooLarge,
  UnboundVariable,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Guard-rail failures (input too large for exhaustive methods).
  bool is_guard_rail() const noexcept {
    return code_ == ErrorCode::TooLarge || code_ == ErrorCode::ExpansionTooLarge;
  }

 private:
  ErrorCode code_;
};

}  // namespace arbor
