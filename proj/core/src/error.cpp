#include "eulerl2/error.hpp"

namespace eulerl2 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::OnCone: return "OnConeError";
    case ErrorCode::InvalidRegion: return "InvalidRegion";
    case ErrorCode::NonpositiveScale: return "NonpositiveScale";
    case ErrorCode::LightlikeTangent: return "LightlikeTangent";
    case ErrorCode::DegenerateSpeed: return "DegenerateSpeed";
    case ErrorCode::ConeContact: return "ConeContact";
    case ErrorCode::NotSpacelike: return "NotSpacelike";
    case ErrorCode::NotSpacelikeGraph: return "NotSpacelikeGraph";
    case ErrorCode::WrongRegion: return "WrongRegion";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::UnsupportedAlpha: return "UnsupportedAlpha";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::BlowUp: return "BlowUp";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::InadmissiblePerturbation: return "InadmissiblePerturbation";
    case ErrorCode::InvalidEndpoints: return "InvalidEndpoints";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace eulerl2
