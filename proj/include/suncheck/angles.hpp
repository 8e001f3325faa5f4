#pragma once

#include <cmath>
#include <numbers>

namespace suncheck {

inline constexpr double kPi = std::numbers::pi;

constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Wrap an angle into [0, 360).
inline double normalize_deg(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r < 0.0) r += 360.0;
  // fmod can return 360.0 - epsilon rounding back up to 360.0
  return (r == 360.0) ? 0.0 : r;
}

// Wrap an angle into (-180, 180].
inline double wrap_deg_180(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r <= -180.0) r += 360.0;
  if (r > 180.0) r -= 360.0;
  return r;
}

// Shortest angular separation on the circle, in [0, 180].
inline double circular_distance_deg(double a, double b) {
  double d = std::fabs(std::fmod(a - b, 360.0));
  return d > 180.0 ? 360.0 - d : d;
}

}  // namespace suncheck
