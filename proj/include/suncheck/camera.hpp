#pragma once

#include <Eigen/Dense>

#include "suncheck/errors.hpp"

namespace suncheck {

// Image pixel in standard convention: origin at the top-left corner,
// x rightward, y downward. Values may fall outside the image rectangle.
struct PixelPoint {
  double x = 0.0;
  double y = 0.0;
};

// Point in the camera-centred world frame: Y vertical up, Z along the
// horizontal image direction, X to the right. The ground plane sits at
// Y = -camera_height.
struct WorldPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

struct CameraIntrinsics {
  double focal_px = 1.0;  // focal length in pixels (square pixels, zero skew)
  double u0 = 0.0;        // principal point, pixels
  double v0 = 0.0;
  int width = 0;  // image size, pixels
  int height = 0;

  // Principal point defaulted to the image centre.
  static CameraIntrinsics centered(double focal_px, int width, int height) {
    return {focal_px, width / 2.0, height / 2.0, width, height};
  }

  void validate() const;
};

struct CameraPose {
  double pitch_deg = 0.0;  // tilt about the horizontal axis, upward positive, (-45, 45)
  double yaw_deg = 0.0;    // compass bearing of the image direction, [0, 360)
  double height = 1.0;     // camera centre above the ground plane, > 0

  void validate() const;
};

using ProjectionMatrix = Eigen::Matrix<double, 3, 4>;

// Rotation about the world X axis by the camera pitch. Orthonormal, det = 1.
Eigen::Matrix3d rotation_matrix(double pitch_deg);

// Full pinhole mapping K R [I|0] for a zero-roll camera.
ProjectionMatrix projection_matrix(const CameraIntrinsics& intr, double pitch_deg);

// Project a world point through P and convert the result to y-down pixel
// coordinates. Throws if the point is at or behind the camera plane.
PixelPoint project(const ProjectionMatrix& P, const CameraIntrinsics& intr,
                   const WorldPoint& pt);

PixelPoint project(const CameraIntrinsics& intr, double pitch_deg, const WorldPoint& pt);

}  // namespace suncheck
