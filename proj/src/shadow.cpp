#include "suncheck/shadow.hpp"

#include <algorithm>
#include <cmath>

#include "suncheck/angles.hpp"

namespace suncheck {

namespace {

// Centred offsets in the internal y-up frame: x' = x - u0, y' = v0 - y.
// Ground points in front of a level camera get y' < 0.
struct Centred {
  double x;
  double y;
};

Centred centred(const PixelPoint& p, const CameraIntrinsics& intr) {
  return {p.x - intr.u0, intr.v0 - p.y};
}

// Denominators smaller than this (relative to the focal length, which sets
// the pixel scale) are treated as exactly degenerate.
double degeneracy_tol(const CameraIntrinsics& intr) { return 1e-9 * intr.focal_px; }

}  // namespace

WorldPoint recover_ground_point(const PixelPoint& pt, const CameraIntrinsics& intr,
                                double pitch_deg, double camera_height) {
  intr.validate();
  if (!(camera_height > 0.0))
    throw Error(ErrorCode::Domain, "camera height must be positive");
  if (!(pitch_deg > -45.0 && pitch_deg < 45.0))
    throw Error(ErrorCode::Domain, "pitch must lie strictly inside (-45, 45) degrees");

  const Centred c = centred(pt, intr);
  const double f = intr.focal_px;
  const double t = std::tan(deg2rad(pitch_deg));
  const double cosp = std::cos(deg2rad(pitch_deg));

  const double denom = c.y + f * t;
  if (std::fabs(denom) < degeneracy_tol(intr))
    throw Error(ErrorCode::DegenerateAnnotation, "pixel lies on the horizon line");

  const double x = camera_height * (-c.x) / (cosp * denom);
  const double z = camera_height * (c.y * t - f) / denom;
  if (!(z > 0.0))
    throw Error(ErrorCode::InconsistentAnnotation,
                "ground intersection lies behind the camera");
  return {x, -camera_height, z};
}

WorldPoint recover_top_point(const PixelPoint& top, const WorldPoint& base_world,
                             const CameraIntrinsics& intr, double pitch_deg) {
  intr.validate();
  if (!(pitch_deg > -45.0 && pitch_deg < 45.0))
    throw Error(ErrorCode::Domain, "pitch must lie strictly inside (-45, 45) degrees");

  const Centred c3 = centred(top, intr);
  const double f = intr.focal_px;
  const double s = std::sin(deg2rad(pitch_deg));
  const double cosp = std::cos(deg2rad(pitch_deg));

  const double denom = f * cosp - c3.y * s;
  if (std::fabs(denom) < degeneracy_tol(intr))
    throw Error(ErrorCode::DegenerateAnnotation,
                "object-top pixel maps to a vanishing vertical direction");

  const double y = base_world.z * (f * s + c3.y * cosp) / denom;
  return {base_world.x, y, base_world.z};
}

double infer_altitude(const ShadowAnnotation& ann, const CameraIntrinsics& intr,
                      double pitch_deg) {
  if (!ann.object_top)
    throw Error(ErrorCode::InsufficientAnnotation,
                "object top is required for the altitude angle");
  intr.validate();
  if (!(pitch_deg > -45.0 && pitch_deg < 45.0))
    throw Error(ErrorCode::Domain, "pitch must lie strictly inside (-45, 45) degrees");

  const Centred p1 = centred(ann.shadow_tip, intr);
  const Centred p2 = centred(ann.object_base, intr);
  const Centred p3 = centred(*ann.object_top, intr);

  const double f = intr.focal_px;
  const double s = std::sin(deg2rad(pitch_deg));
  const double cosp = std::cos(deg2rad(pitch_deg));
  const double t = std::tan(deg2rad(pitch_deg));
  const double tol = degeneracy_tol(intr);

  // Denominators of the closed-form world coordinates; each zero means a
  // pixel on the horizon line or a vanishing vertical direction.
  if (std::fabs(p1.y + f * t) < tol || std::fabs(p2.y + f * t) < tol)
    throw Error(ErrorCode::DegenerateAnnotation, "shadow pixel lies on the horizon line");
  if (std::fabs(f * cosp - p3.y * s) < tol)
    throw Error(ErrorCode::DegenerateAnnotation,
                "object-top pixel maps to a vanishing vertical direction");

  const double ma = std::pow(f * (p1.x - p2.x) * s + (p1.x * p2.y - p2.x * p1.y) * cosp, 2) +
                    f * f * (p2.y - p1.y) * (p2.y - p1.y);
  const double mb = std::pow(cosp, 4) * std::pow(p1.y + f * t, 2) * std::pow(p2.y + f * t, 2);
  const double mc = f * f * (p2.y - p3.y) * (p2.y - p3.y);
  const double md = std::pow(f * s + p2.y * cosp, 2) * std::pow(f * cosp - p3.y * s, 2);

  if (ma == 0.0 && md == 0.0)
    throw Error(ErrorCode::DegenerateAnnotation, "shadow and object annotations coincide");
  const double denom = ma * md + mb * mc;
  if (!(denom > 0.0))
    throw Error(ErrorCode::DegenerateAnnotation, "altitude expression is indeterminate");

  const double ratio = std::clamp(ma * md / denom, 0.0, 1.0);
  const double altitude = rad2deg(std::acos(std::sqrt(ratio)));
  if (!(altitude > 0.0 && altitude < 90.0))
    throw Error(ErrorCode::SunBelowHorizon,
                "inferred altitude falls outside (0, 90) degrees");
  return altitude;
}

double infer_azimuth(const ShadowAnnotation& ann, const CameraIntrinsics& intr,
                     const CameraPose& pose) {
  pose.validate();
  const WorldPoint tip = recover_ground_point(ann.shadow_tip, intr, pose.pitch_deg, pose.height);
  const WorldPoint base = recover_ground_point(ann.object_base, intr, pose.pitch_deg, pose.height);

  // Horizontal vector from shadow tip to object base; the sun lies in this
  // compass direction as seen from the tip.
  const double vx = base.x - tip.x;
  const double vz = base.z - tip.z;
  if (std::hypot(vx, vz) <= 1e-12 * pose.height)
    throw Error(ErrorCode::DegenerateAnnotation, "shadow has zero length");

  // Signed clockwise angle from the image direction, viewed from above.
  const double clockwise_deg = rad2deg(std::atan2(vx, vz));
  return normalize_deg(pose.yaw_deg + clockwise_deg);
}

SunEstimate infer_sun_position(const ShadowAnnotation& ann, const CameraIntrinsics& intr,
                               const CameraPose& pose) {
  SunEstimate est;
  est.azimuth_deg = infer_azimuth(ann, intr, pose);
  if (ann.object_top) est.altitude_deg = infer_altitude(ann, intr, pose.pitch_deg);
  return est;
}

}  // namespace suncheck
