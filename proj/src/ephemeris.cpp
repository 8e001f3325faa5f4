#include "suncheck/ephemeris.hpp"

#include <algorithm>
#include <cmath>

#include "suncheck/angles.hpp"

namespace suncheck {

void ClaimedContext::validate() const {
  timestamp.validate();
  if (!(latitude_deg >= -90.0 && latitude_deg <= 90.0))
    throw Error(ErrorCode::Context, "latitude outside [-90, 90]");
  if (!(longitude_deg > -180.0 && longitude_deg <= 180.0))
    throw Error(ErrorCode::Context, "longitude outside (-180, 180]");
}

namespace {

void check_day(int day_of_year) {
  if (day_of_year < 0 || day_of_year > 365)
    throw Error(ErrorCode::Domain, "day of year outside [0, 365]");
}

}  // namespace

double equation_of_time(int day_of_year) {
  check_day(day_of_year);
  const double b = deg2rad(360.0 * (day_of_year - 81) / 364.0);
  return 9.87 * std::sin(2.0 * b) - 7.53 * std::cos(b) - 1.5 * std::sin(b);
}

double declination(int day_of_year) {
  check_day(day_of_year);
  return -23.44 * std::cos(deg2rad(360.0 * (day_of_year + 10) / 365.0));
}

double solar_time_hours(const ClaimedContext& ctx) {
  ctx.validate();
  const double et_min = equation_of_time(ctx.timestamp.day_of_year());
  const double std_meridian_deg = ctx.timestamp.utc_offset_minutes / 60.0 * 15.0;
  // 4 minutes of sun travel per degree of longitude east of the standard meridian.
  return ctx.timestamp.local_hours() + et_min / 60.0 +
         4.0 * (ctx.longitude_deg - std_meridian_deg) / 60.0;
}

double hour_angle_deg(double solar_time_h) { return 15.0 * (solar_time_h - 12.0); }

SolarAngles solar_angles(const ClaimedContext& ctx) {
  double ts = solar_time_hours(ctx);
  ts -= 24.0 * std::floor(ts / 24.0);  // [0, 24)
  if (ts == 0.0) ts = 24.0;
  SolarAngles out;
  out.solar_time_h = ts;
  out.hour_angle_deg = hour_angle_deg(ts);
  out.declination_deg = declination(ctx.timestamp.day_of_year());
  out.equation_of_time_min = equation_of_time(ctx.timestamp.day_of_year());
  return out;
}

SunPosition sun_position_from_context(const ClaimedContext& ctx) {
  const SolarAngles sa = solar_angles(ctx);
  const double h = deg2rad(sa.hour_angle_deg);
  const double phi = deg2rad(ctx.latitude_deg);
  const double delta = deg2rad(sa.declination_deg);

  const double sin_alt =
      std::sin(delta) * std::sin(phi) + std::cos(phi) * std::cos(delta) * std::cos(h);
  const double altitude = rad2deg(std::asin(std::clamp(sin_alt, -1.0, 1.0)));

  // South-referenced azimuth (westward positive), then shifted to the
  // north-clockwise convention. atan2 settles the quadrant.
  const double azimuth_south = std::atan2(
      std::sin(h), std::sin(phi) * std::cos(h) - std::cos(phi) * std::tan(delta));
  const double azimuth = normalize_deg(180.0 + rad2deg(azimuth_south));

  return {azimuth, altitude};
}

}  // namespace suncheck
