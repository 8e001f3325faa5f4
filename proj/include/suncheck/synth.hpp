#pragma once

#include <cstdint>
#include <vector>

#include "suncheck/ephemeris.hpp"
#include "suncheck/shadow.hpp"

namespace suncheck {

// A single vertical object standing on the ground plane, plus the camera
// that images it.
struct SceneSpec {
  double object_height = 1.0;             // metres
  WorldPoint base_position{0.0, -1.0, 5.0};  // on the ground plane, in front of camera
  CameraIntrinsics intrinsics;
  CameraPose pose;

  void validate() const;
};

struct NoiseSpec {
  double sigma_px = 0.0;   // std deviation of the pixel perturbation
  std::uint64_t seed = 0;  // stream seed for this photo
  int trials = 1;

  void validate() const;
};

// Ground position of the shadow tip cast by the object top. The compass
// bearing from tip to base equals the sun azimuth; the length follows
// |tip - base| * tan(altitude) = object height.
WorldPoint shadow_tip_world(const SceneSpec& scene, const SunPosition& sun);

// Project tip, base and top into the image. With require_in_frame the pixels
// must fall inside the image rectangle.
ShadowAnnotation synthesize_scene(const SceneSpec& scene, const SunPosition& sun,
                                  bool require_in_frame = false);

// Add i.i.d. zero-mean Gaussian pixel noise to every annotated coordinate.
// Deterministic per (spec.seed, trial_index), independent of call order.
ShadowAnnotation add_noise(const ShadowAnnotation& ann, const NoiseSpec& noise,
                           int trial_index);

// One simulated photo: the scene annotation, the sun position that produced
// it, and the matching claimed context.
struct SyntheticFrame {
  ClaimedContext context;
  SunPosition truth_sun;
  ShadowAnnotation annotation;
};

// Desk-scale reference dataset: a 1 m object in front of a fixed phone-like
// camera (f = 3351.6 px, 4032x3024, height 1.6 m) in New York City on
// 2017-03-21, one frame every 5 minutes from 09:00 to 15:55 (84 frames).
std::vector<SyntheticFrame> make_dataset1(double object_distance_m = 5.0,
                                          double pitch_deg = 0.0);

// The camera/scene used by make_dataset1, for reuse by custom generators.
SceneSpec dataset1_scene(double object_distance_m = 5.0, double pitch_deg = 0.0);

}  // namespace suncheck
