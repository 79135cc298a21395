#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hso {

enum class ErrorCode {
  OutOfRange,
  SelfLoop,
  DuplicateEdge,
  EdgePresent,
  EdgeAbsent,
  OrderTooLarge,
  OrderTooSmall,
  MalformedHeader,
  TruncatedBody,
  IllegalCharacter,
  ZeroDegree,
  DegreeExceedsDelta,
  K2Edge,
  InvalidParameters,
  UnknownTheorem,
  OrderOutOfRange,
  InfeasibleEdgeCount,
  DisconnectedInput,
  NotATree,
  NotUnicyclic,
  NotBicyclic,
  DomainViolation,
  Io,
  Usage,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (CLI, Python bindings) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hso
