#include "suncheck/camera.hpp"

#include <cmath>

#include "suncheck/angles.hpp"

namespace suncheck {

void CameraIntrinsics::validate() const {
  if (!(focal_px > 0.0) || !std::isfinite(focal_px))
    throw Error(ErrorCode::Domain, "focal length must be a positive number of pixels");
  if (width <= 0 || height <= 0)
    throw Error(ErrorCode::Domain, "image size must be positive");
  if (!std::isfinite(u0) || !std::isfinite(v0))
    throw Error(ErrorCode::Domain, "principal point must be finite");
}

void CameraPose::validate() const {
  if (!(pitch_deg > -45.0 && pitch_deg < 45.0))
    throw Error(ErrorCode::Domain, "pitch must lie strictly inside (-45, 45) degrees");
  if (!(height > 0.0))
    throw Error(ErrorCode::Domain, "camera height must be positive");
  if (!std::isfinite(yaw_deg))
    throw Error(ErrorCode::Domain, "yaw must be finite");
}

Eigen::Matrix3d rotation_matrix(double pitch_deg) {
  if (!(pitch_deg > -45.0 && pitch_deg < 45.0))
    throw Error(ErrorCode::Domain, "pitch must lie strictly inside (-45, 45) degrees");
  const double c = std::cos(deg2rad(pitch_deg));
  const double s = std::sin(deg2rad(pitch_deg));
  Eigen::Matrix3d r;
  r << 1.0, 0.0, 0.0,
       0.0,   c,  -s,
       0.0,   s,   c;
  return r;
}

ProjectionMatrix projection_matrix(const CameraIntrinsics& intr, double pitch_deg) {
  intr.validate();
  if (!(pitch_deg > -45.0 && pitch_deg < 45.0))
    throw Error(ErrorCode::Domain, "pitch must lie strictly inside (-45, 45) degrees");
  const double f = intr.focal_px;
  const double u0 = intr.u0;
  const double v0 = intr.v0;
  const double c = std::cos(deg2rad(pitch_deg));
  const double s = std::sin(deg2rad(pitch_deg));
  ProjectionMatrix p;
  p <<   f, u0 * s,         u0 * c,        0.0,
       0.0, f * c + v0 * s, v0 * c - f * s, 0.0,
       0.0, s,              c,             0.0;
  return p;
}

PixelPoint project(const ProjectionMatrix& P, const CameraIntrinsics& intr,
                   const WorldPoint& pt) {
  const Eigen::Vector4d xh(pt.x, pt.y, pt.z, 1.0);
  const Eigen::Vector3d img = P * xh;
  const double depth = img(2);
  if (!(depth > 0.0))
    throw Error(ErrorCode::Projection, "world point at or behind the camera plane");
  // The projection model produces a y-up image frame; flip about the
  // principal point to reach y-down pixel coordinates.
  const double xm = img(0) / depth;
  const double ym = img(1) / depth;
  return {xm, 2.0 * intr.v0 - ym};
}

PixelPoint project(const CameraIntrinsics& intr, double pitch_deg, const WorldPoint& pt) {
  return project(projection_matrix(intr, pitch_deg), intr, pt);
}

}  // namespace suncheck
