#pragma once

#include <optional>

#include "suncheck/camera.hpp"

namespace suncheck {

// Pixel positions of the three scene points that drive the solver: the tip
// of the cast shadow, the footprint of the vertical object, and (optionally)
// the top of the object. The top is only needed for the altitude angle.
struct ShadowAnnotation {
  PixelPoint shadow_tip;                  // X1
  PixelPoint object_base;                 // X2
  std::optional<PixelPoint> object_top;   // X3
};

// Sun position on the sky hemisphere. Azimuth is measured clockwise from
// true north; altitude upward from the horizontal plane.
struct SunPosition {
  double azimuth_deg = 0.0;   // [0, 360)
  double altitude_deg = 0.0;  // (-90, 90]
};

// Partial sun position as recoverable from an image: either angle may be
// missing depending on which annotation points and camera data exist.
struct SunEstimate {
  std::optional<double> azimuth_deg;
  std::optional<double> altitude_deg;
};

// Intersect the back-projected ray of a pixel with the ground plane
// Y = -camera_height. Fails on horizon pixels and on pixels whose ground
// intersection lies behind the camera.
WorldPoint recover_ground_point(const PixelPoint& pt, const CameraIntrinsics& intr,
                                double pitch_deg, double camera_height);

// Lift the top pixel of a vertical object onto the vertical line through its
// recovered base point.
WorldPoint recover_top_point(const PixelPoint& top, const WorldPoint& base_world,
                             const CameraIntrinsics& intr, double pitch_deg);

// Sun altitude angle in degrees, in (0, 90), from a full annotation.
// Independent of camera height and yaw.
double infer_altitude(const ShadowAnnotation& ann, const CameraIntrinsics& intr,
                      double pitch_deg);

// Sun azimuth angle in degrees, in [0, 360). Needs the camera yaw; works
// without the object-top point.
double infer_azimuth(const ShadowAnnotation& ann, const CameraIntrinsics& intr,
                     const CameraPose& pose);

// Both angles where the annotation permits: altitude is omitted when the
// object top is not annotated.
SunEstimate infer_sun_position(const ShadowAnnotation& ann, const CameraIntrinsics& intr,
                               const CameraPose& pose);

}  // namespace suncheck
