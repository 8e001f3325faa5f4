#pragma once

#include <optional>
#include <string>

#include "suncheck/shadow.hpp"

namespace suncheck {

struct Thresholds {
  double altitude_threshold_deg = 5.0;  // bound on d_h
  double position_threshold_deg = 9.4;  // bound on d_p
  // Only used for single-variable studies and for the azimuth-only fallback.
  std::optional<double> azimuth_threshold_deg;

  void validate() const;
};

struct Verdict {
  std::optional<double> d_h;  // |altitude difference|
  std::optional<double> d_A;  // circular azimuth difference, [0, 180]
  std::optional<double> d_p;  // sqrt(d_A^2 + d_h^2)
  bool consistent = false;
  std::string rule_applied;  // "combined", "altitude_only" or "azimuth_only"
};

// |h_s - h_m|
double altitude_distance(double shadow_altitude_deg, double context_altitude_deg);

// Circular distance, correct across the north wrap: min(|d|, 360 - |d|).
double azimuth_distance(double shadow_azimuth_deg, double context_azimuth_deg);

// Euclidean combination of the two angle distances.
double position_distance(double d_azimuth, double d_altitude);

// Compare a shadow-inferred estimate against the context-implied position.
// Full estimates use the combined rule (d_h and d_p both within bounds);
// partial estimates fall back to single-angle checks.
Verdict validate(const SunEstimate& shadow, const SunPosition& context,
                 const Thresholds& thresholds);

}  // namespace suncheck
