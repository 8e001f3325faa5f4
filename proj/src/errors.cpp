#include "suncheck/errors.hpp"

namespace suncheck {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::Projection: return "projection error";
    case ErrorCode::DegenerateAnnotation: return "degenerate annotation";
    case ErrorCode::InconsistentAnnotation: return "inconsistent annotation";
    case ErrorCode::InsufficientAnnotation: return "insufficient annotation";
    case ErrorCode::SunBelowHorizon: return "sun below horizon";
    case ErrorCode::Context: return "context error";
    case ErrorCode::SceneInfeasible: return "scene infeasible";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::ValidationImpossible: return "validation impossible";
  }
  return "unknown error";
}

}  // namespace suncheck
