#pragma once

#include "suncheck/shadow.hpp"
#include "suncheck/timestamp.hpp"

namespace suncheck {

// Claimed capture context: local timestamp with UTC offset plus GPS
// coordinates (east-positive longitude).
struct ClaimedContext {
  Timestamp timestamp;
  double latitude_deg = 0.0;   // [-90, 90]
  double longitude_deg = 0.0;  // (-180, 180]

  void validate() const;
};

struct SolarAngles {
  double solar_time_h = 0.0;         // normalized into (0, 24]
  double hour_angle_deg = 0.0;       // 15 * (solar_time_h - 12), in (-180, 180]
  double declination_deg = 0.0;      // |.| <= 23.44
  double equation_of_time_min = 0.0;
};

// Equation of time, minutes, for the day-of-year N (days since Jan 1).
// Three-harmonic approximation; |ET| <= 17 min.
double equation_of_time(int day_of_year);

// Solar declination, degrees: -23.44 * cos(360 (N + 10) / 365).
double declination(int day_of_year);

// Local clock time converted to solar time, fractional hours (unwrapped).
// The standard meridian is 15 degrees per hour of UTC offset.
double solar_time_hours(const ClaimedContext& ctx);

// H = 15 * (t_s - 12); zero at solar noon, afternoon positive.
double hour_angle_deg(double solar_time_h);

SolarAngles solar_angles(const ClaimedContext& ctx);

// Sun position implied by the claimed time and location. Altitude may be
// negative (sun below the horizon); callers decide what that means.
SunPosition sun_position_from_context(const ClaimedContext& ctx);

}  // namespace suncheck
