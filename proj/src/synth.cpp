#include "suncheck/synth.hpp"

#include <cmath>

#include "suncheck/angles.hpp"
#include "suncheck/rng.hpp"

namespace suncheck {

void SceneSpec::validate() const {
  intrinsics.validate();
  pose.validate();
  if (!(object_height > 0.0))
    throw Error(ErrorCode::Domain, "object height must be positive");
  if (std::fabs(base_position.y + pose.height) > 1e-12 * std::max(1.0, pose.height))
    throw Error(ErrorCode::Domain, "object base must lie on the ground plane");
  if (!(base_position.z > 0.0))
    throw Error(ErrorCode::Domain, "object base must be in front of the camera");
}

void NoiseSpec::validate() const {
  if (!(sigma_px >= 0.0))
    throw Error(ErrorCode::Domain, "noise level must be non-negative");
  if (trials < 1) throw Error(ErrorCode::Domain, "trial count must be at least 1");
}

WorldPoint shadow_tip_world(const SceneSpec& scene, const SunPosition& sun) {
  scene.validate();
  if (!(sun.altitude_deg > 0.0))
    throw Error(ErrorCode::SunBelowHorizon, "no shadow when the sun is at or below the horizon");
  if (!(sun.altitude_deg < 90.0))
    throw Error(ErrorCode::Domain, "altitude must be below 90 degrees");

  const double length = scene.object_height / std::tan(deg2rad(sun.altitude_deg));
  // Sun bearing relative to the image direction; the shadow extends the
  // opposite way.
  const double rel = deg2rad(sun.azimuth_deg - scene.pose.yaw_deg);
  return {scene.base_position.x - length * std::sin(rel), scene.base_position.y,
          scene.base_position.z - length * std::cos(rel)};
}

ShadowAnnotation synthesize_scene(const SceneSpec& scene, const SunPosition& sun,
                                  bool require_in_frame) {
  const WorldPoint tip = shadow_tip_world(scene, sun);
  const WorldPoint base = scene.base_position;
  const WorldPoint top{base.x, base.y + scene.object_height, base.z};

  const ProjectionMatrix P = projection_matrix(scene.intrinsics, scene.pose.pitch_deg);
  ShadowAnnotation ann;
  try {
    ann.shadow_tip = project(P, scene.intrinsics, tip);
    ann.object_base = project(P, scene.intrinsics, base);
    ann.object_top = project(P, scene.intrinsics, top);
  } catch (const Error& e) {
    throw Error(ErrorCode::SceneInfeasible,
                std::string("scene point not imageable (") + e.what() + ")");
  }

  if (require_in_frame) {
    const auto in_frame = [&](const PixelPoint& p) {
      return p.x >= 0.0 && p.x < scene.intrinsics.width && p.y >= 0.0 &&
             p.y < scene.intrinsics.height;
    };
    if (!in_frame(ann.shadow_tip) || !in_frame(ann.object_base) || !in_frame(*ann.object_top))
      throw Error(ErrorCode::SceneInfeasible, "annotation falls outside the image frame");
  }
  return ann;
}

ShadowAnnotation add_noise(const ShadowAnnotation& ann, const NoiseSpec& noise,
                           int trial_index) {
  noise.validate();
  Rng rng(derive_seed(noise.seed, static_cast<std::uint64_t>(trial_index)));
  ShadowAnnotation out = ann;
  // Fixed draw order: tip, base, top; x before y.
  out.shadow_tip.x += noise.sigma_px * rng.gaussian();
  out.shadow_tip.y += noise.sigma_px * rng.gaussian();
  out.object_base.x += noise.sigma_px * rng.gaussian();
  out.object_base.y += noise.sigma_px * rng.gaussian();
  if (out.object_top) {
    out.object_top->x += noise.sigma_px * rng.gaussian();
    out.object_top->y += noise.sigma_px * rng.gaussian();
  }
  return out;
}

SceneSpec dataset1_scene(double object_distance_m, double pitch_deg) {
  SceneSpec scene;
  scene.object_height = 1.0;
  scene.intrinsics = CameraIntrinsics::centered(3351.6, 4032, 3024);
  scene.pose = CameraPose{pitch_deg, 0.0, 1.6};
  scene.base_position = {0.0, -1.6, object_distance_m};
  return scene;
}

std::vector<SyntheticFrame> make_dataset1(double object_distance_m, double pitch_deg) {
  const SceneSpec scene = dataset1_scene(object_distance_m, pitch_deg);

  ClaimedContext ctx;
  ctx.latitude_deg = 40.71;
  ctx.longitude_deg = -74.0;
  // 2017-03-21 is inside US daylight saving time.
  ctx.timestamp = Timestamp{2017, 3, 21, 9, 0, 0, -4 * 60};

  std::vector<SyntheticFrame> frames;
  frames.reserve(84);
  for (int k = 0; k < 84; ++k) {
    SyntheticFrame frame;
    frame.context = ctx;
    frame.context.timestamp = ctx.timestamp.shifted_by_minutes(5 * k);
    frame.truth_sun = sun_position_from_context(frame.context);
    frame.annotation = synthesize_scene(scene, frame.truth_sun);
    frames.push_back(frame);
  }
  return frames;
}

}  // namespace suncheck
