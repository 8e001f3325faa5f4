#pragma once

#include <stdexcept>
#include <string>

namespace suncheck {

enum class ErrorCode {
  Domain,                  // argument outside its documented range
  Projection,              // world point at or behind the camera plane
  DegenerateAnnotation,    // horizon-line pixels, vanishing denominators
  InconsistentAnnotation,  // annotation implies geometry behind the camera
  InsufficientAnnotation,  // a required annotation point is missing
  SunBelowHorizon,         // inferred or requested altitude outside (0, 90)
  Context,                 // claimed timestamp/location invalid
  SceneInfeasible,         // synthetic scene cannot be imaged
  Parse,                   // malformed input file or timestamp
  ValidationImpossible,    // no comparable angle pair available
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace suncheck
