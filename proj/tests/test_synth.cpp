#include <doctest.h>

#include <cmath>
#include <sstream>

#include "suncheck/angles.hpp"
#include "suncheck/synth.hpp"

using namespace suncheck;

namespace {

SceneSpec small_scene(double pitch = 0.0, double yaw = 0.0) {
  SceneSpec scene;
  scene.object_height = 1.0;
  scene.intrinsics = CameraIntrinsics{1000.0, 500.0, 400.0, 1000, 800};
  scene.pose = CameraPose{pitch, yaw, 1.0};
  scene.base_position = {0.0, -1.0, 5.0};
  return scene;
}

std::string dump(const ShadowAnnotation& a) {
  std::ostringstream os;
  os.precision(17);
  os << a.shadow_tip.x << ' ' << a.shadow_tip.y << ' ' << a.object_base.x << ' '
     << a.object_base.y;
  if (a.object_top) os << ' ' << a.object_top->x << ' ' << a.object_top->y;
  return os.str();
}

}  // namespace

TEST_CASE("shadow tip geometry") {
  const SceneSpec scene = small_scene();

  // 45 degrees: shadow length equals the object height.
  WorldPoint tip = shadow_tip_world(scene, {90.0, 45.0});
  CHECK(std::hypot(tip.x - 0.0, tip.z - 5.0) == doctest::Approx(1.0).epsilon(1e-12));

  // Sun behind the scene pushes the tip straight ahead.
  tip = shadow_tip_world(scene, {180.0, 45.0});
  CHECK(tip.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(tip.z == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(tip.y == doctest::Approx(-1.0).epsilon(1e-12));

  // Near-zenith sun: vanishing shadow.
  tip = shadow_tip_world(scene, {10.0, 89.999});
  CHECK(std::hypot(tip.x, tip.z - 5.0) < 1e-4);
}

TEST_CASE("shadow length law and bearing") {
  const SceneSpec scene = small_scene(0.0, 37.0);
  for (double alt = 10.0; alt < 90.0; alt += 11.0) {
    for (double az = 3.0; az < 360.0; az += 41.0) {
      const WorldPoint tip = shadow_tip_world(scene, {az, alt});
      const double len = std::hypot(tip.x - scene.base_position.x,
                                    tip.z - scene.base_position.z);
      CHECK(len * std::tan(deg2rad(alt)) ==
            doctest::Approx(scene.object_height).epsilon(1e-12));
      const double bearing = normalize_deg(
          rad2deg(std::atan2(scene.base_position.x - tip.x, scene.base_position.z - tip.z)) +
          scene.pose.yaw_deg);
      CHECK(circular_distance_deg(bearing, az) < 1e-9);
    }
  }
}

TEST_CASE("no shadow outside (0, 90) altitude") {
  const SceneSpec scene = small_scene();
  CHECK_THROWS_AS(shadow_tip_world(scene, {100.0, 0.0}), Error);
  CHECK_THROWS_AS(shadow_tip_world(scene, {100.0, -5.0}), Error);
  CHECK_THROWS_AS(shadow_tip_world(scene, {100.0, 90.0}), Error);
  try {
    shadow_tip_world(scene, {100.0, -5.0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SunBelowHorizon);
  }
}

TEST_CASE("scene validation") {
  SceneSpec bad = small_scene();
  bad.base_position.y = -2.0;  // off the ground plane
  CHECK_THROWS_AS(synthesize_scene(bad, {180.0, 45.0}), Error);
  bad = small_scene();
  bad.base_position.z = -1.0;
  CHECK_THROWS_AS(synthesize_scene(bad, {180.0, 45.0}), Error);
  bad = small_scene();
  bad.object_height = 0.0;
  CHECK_THROWS_AS(synthesize_scene(bad, {180.0, 45.0}), Error);
}

TEST_CASE("synthesis round-trips through the solver") {
  for (double pitch : {0.0, 10.0, 20.0, -12.0}) {
    for (double yaw : {0.0, 30.0, 115.0, 301.0}) {
      const SceneSpec scene = small_scene(pitch, yaw);
      for (double alt : {15.0, 35.0, 60.0, 84.0}) {
        for (double az : {0.0, 45.0, 160.0, 250.0, 359.0}) {
          const SunPosition sun{az, alt};
          const ShadowAnnotation ann = synthesize_scene(scene, sun);
          const SunEstimate est = infer_sun_position(ann, scene.intrinsics, scene.pose);
          REQUIRE(est.altitude_deg.has_value());
          REQUIRE(est.azimuth_deg.has_value());
          CHECK(std::fabs(*est.altitude_deg - alt) < 1e-9);
          CHECK(circular_distance_deg(*est.azimuth_deg, az) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("round trip at the paper's reference configuration") {
  // azimuth 250, camera yaw 30, altitude 35
  const SceneSpec scene = small_scene(0.0, 30.0);
  const ShadowAnnotation ann = synthesize_scene(scene, {250.0, 35.0});
  const SunEstimate est = infer_sun_position(ann, scene.intrinsics, scene.pose);
  CHECK(*est.azimuth_deg == doctest::Approx(250.0).epsilon(1e-9));
  CHECK(*est.altitude_deg == doctest::Approx(35.0).epsilon(1e-9));
}

TEST_CASE("tilting the camera moves pixels but not the inferred angles") {
  const SunPosition sun{222.0, 41.0};
  const SceneSpec flat = small_scene(0.0, 80.0);
  const SceneSpec tilted = small_scene(20.0, 80.0);
  const ShadowAnnotation a = synthesize_scene(flat, sun);
  const ShadowAnnotation b = synthesize_scene(tilted, sun);
  CHECK(std::fabs(a.object_base.y - b.object_base.y) > 100.0);

  const SunEstimate ea = infer_sun_position(a, flat.intrinsics, flat.pose);
  const SunEstimate eb = infer_sun_position(b, tilted.intrinsics, tilted.pose);
  CHECK(*ea.altitude_deg == doctest::Approx(*eb.altitude_deg).epsilon(1e-9));
  CHECK(*ea.azimuth_deg == doctest::Approx(*eb.azimuth_deg).epsilon(1e-9));
}

TEST_CASE("points behind the camera make the scene infeasible") {
  SceneSpec scene = small_scene();
  scene.base_position.z = 0.4;
  // Long shadow toward the camera crosses the camera plane.
  try {
    synthesize_scene(scene, {0.0, 20.0});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SceneInfeasible);
  }
}

TEST_CASE("frame containment is only checked on request") {
  SceneSpec scene = small_scene();
  const SunPosition low_sun{90.0, 8.0};  // tip far to the side, out of frame
  const ShadowAnnotation ann = synthesize_scene(scene, low_sun);
  CHECK((ann.shadow_tip.x < 0.0 || ann.shadow_tip.x >= scene.intrinsics.width));
  CHECK_THROWS_AS(synthesize_scene(scene, low_sun, true), Error);
}

TEST_CASE("dataset replica has 84 frames and round-trips exactly") {
  const std::vector<SyntheticFrame> frames = make_dataset1(5.0, 0.0);
  REQUIRE(frames.size() == 84);
  CHECK(frames.front().context.timestamp.to_iso8601() == "2017-03-21T09:00:00-04:00");
  CHECK(frames.back().context.timestamp.to_iso8601() == "2017-03-21T15:55:00-04:00");

  const SceneSpec scene = dataset1_scene(5.0, 0.0);
  double worst = 0.0;
  for (const SyntheticFrame& f : frames) {
    const SunEstimate est = infer_sun_position(f.annotation, scene.intrinsics, scene.pose);
    worst = std::max(worst, std::fabs(*est.altitude_deg - f.truth_sun.altitude_deg));
    worst = std::max(worst,
                     circular_distance_deg(*est.azimuth_deg, f.truth_sun.azimuth_deg));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("noise is deterministic and seeded per trial") {
  const ShadowAnnotation ann = synthesize_scene(small_scene(), {210.0, 40.0});

  const NoiseSpec none{0.0, 99, 1};
  const ShadowAnnotation same = add_noise(ann, none, 0);
  CHECK(dump(same) == dump(ann));  // sigma 0 is the identity

  const NoiseSpec spec{2.0, 1234, 16};
  CHECK(dump(add_noise(ann, spec, 3)) == dump(add_noise(ann, spec, 3)));
  CHECK(dump(add_noise(ann, spec, 3)) != dump(add_noise(ann, spec, 4)));

  const NoiseSpec other_seed{2.0, 1235, 16};
  CHECK(dump(add_noise(ann, spec, 3)) != dump(add_noise(ann, other_seed, 3)));

  // Stream for a trial does not depend on other trials having run.
  std::string fresh = dump(add_noise(ann, spec, 7));
  for (int t = 0; t < 7; ++t) (void)add_noise(ann, spec, t);
  CHECK(dump(add_noise(ann, spec, 7)) == fresh);

  CHECK_THROWS_AS(add_noise(ann, NoiseSpec{-1.0, 0, 1}, 0), Error);
}
