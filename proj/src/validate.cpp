#include "suncheck/validate.hpp"

#include <cmath>

#include "suncheck/angles.hpp"

namespace suncheck {

void Thresholds::validate() const {
  if (!(altitude_threshold_deg > 0.0) || !(position_threshold_deg > 0.0))
    throw Error(ErrorCode::Domain, "thresholds must be positive");
  if (azimuth_threshold_deg && !(*azimuth_threshold_deg > 0.0))
    throw Error(ErrorCode::Domain, "azimuth threshold must be positive");
}

double altitude_distance(double shadow_altitude_deg, double context_altitude_deg) {
  return std::fabs(shadow_altitude_deg - context_altitude_deg);
}

double azimuth_distance(double shadow_azimuth_deg, double context_azimuth_deg) {
  return circular_distance_deg(shadow_azimuth_deg, context_azimuth_deg);
}

double position_distance(double d_azimuth, double d_altitude) {
  return std::hypot(d_azimuth, d_altitude);
}

Verdict validate(const SunEstimate& shadow, const SunPosition& context,
                 const Thresholds& thresholds) {
  thresholds.validate();
  if (!shadow.altitude_deg && !shadow.azimuth_deg)
    throw Error(ErrorCode::ValidationImpossible,
                "shadow estimate provides neither altitude nor azimuth");
  if (shadow.altitude_deg && !(*shadow.altitude_deg > 0.0 && *shadow.altitude_deg < 90.0))
    throw Error(ErrorCode::Domain, "shadow altitude outside (0, 90) degrees");

  Verdict v;
  if (shadow.altitude_deg)
    v.d_h = altitude_distance(*shadow.altitude_deg, context.altitude_deg);
  if (shadow.azimuth_deg)
    v.d_A = azimuth_distance(*shadow.azimuth_deg, context.azimuth_deg);
  if (v.d_h && v.d_A) v.d_p = position_distance(*v.d_A, *v.d_h);

  if (v.d_p) {
    v.rule_applied = "combined";
    v.consistent = *v.d_h <= thresholds.altitude_threshold_deg &&
                   *v.d_p <= thresholds.position_threshold_deg;
  } else if (v.d_h) {
    v.rule_applied = "altitude_only";
    v.consistent = *v.d_h <= thresholds.altitude_threshold_deg;
  } else {
    if (!thresholds.azimuth_threshold_deg)
      throw Error(ErrorCode::ValidationImpossible,
                  "azimuth-only estimate needs an azimuth threshold");
    v.rule_applied = "azimuth_only";
    v.consistent = *v.d_A <= *thresholds.azimuth_threshold_deg;
  }
  return v;
}

}  // namespace suncheck
