#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerl2 {

// Every failure raised by the library carries one of these codes so callers
// (and the CLI) can dispatch without parsing messages.
enum class ErrorCode {
  NonFinite,
  OnCone,
  InvalidRegion,
  NonpositiveScale,
  LightlikeTangent,
  DegenerateSpeed,
  ConeContact,
  NotSpacelike,
  NotSpacelikeGraph,
  WrongRegion,
  DomainViolation,
  UnsupportedAlpha,
  InvalidSpec,
  Precondition,
  BlowUp,
  StepTooLarge,
  InadmissiblePerturbation,
  InvalidEndpoints,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eulerl2
