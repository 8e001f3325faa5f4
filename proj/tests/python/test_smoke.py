"""Smoke tests for the python bindings."""

import math

import pytest

import suncheck


def test_ephemeris_known_case():
    ctx = suncheck.ClaimedContext(
        suncheck.Timestamp(2017, 6, 15, 16, 50, 0, 8 * 60), 34.26, 117.19
    )
    sun = suncheck.sun_position_from_context(ctx)
    assert sun.altitude_deg == pytest.approx(29.1, abs=0.1)
    assert 0.0 <= sun.azimuth_deg < 360.0


def test_round_trip_through_the_solver():
    scene = suncheck.dataset1_scene(5.0, 10.0)
    scene.pose.yaw_deg = 42.0
    truth = suncheck.SunPosition(azimuth_deg=250.0, altitude_deg=35.0)
    ann = suncheck.synthesize_scene(scene, truth)
    est = suncheck.infer_sun_position(ann, scene.intrinsics, scene.pose)
    assert est.azimuth_deg == pytest.approx(250.0, abs=1e-9)
    assert est.altitude_deg == pytest.approx(35.0, abs=1e-9)


def test_projection_matrix_shape_and_projection():
    intr = suncheck.CameraIntrinsics.centered(1000.0, 1000, 800)
    p = suncheck.projection_matrix(intr, 0.0)
    assert p.shape == (3, 4)
    px = suncheck.project(intr, 0.0, suncheck.WorldPoint(0.0, -1.0, 5.0))
    assert px.x == pytest.approx(500.0)
    assert px.y == pytest.approx(600.0)


def test_validation_verdict():
    shadow = suncheck.infer_sun_position(
        suncheck.synthesize_scene(
            suncheck.dataset1_scene(5.0, 0.0), suncheck.SunPosition(200.0, 50.0)
        ),
        suncheck.dataset1_scene(5.0, 0.0).intrinsics,
        suncheck.dataset1_scene(5.0, 0.0).pose,
    )
    verdict = suncheck.validate(shadow, suncheck.SunPosition(201.0, 51.0), suncheck.Thresholds())
    assert verdict.consistent
    assert verdict.rule_applied == "combined"
    assert verdict.d_p == pytest.approx(math.hypot(1.0, 1.0), abs=1e-9)

    far = suncheck.validate(shadow, suncheck.SunPosition(240.0, 20.0), suncheck.Thresholds())
    assert not far.consistent


def test_noise_is_seeded():
    scene = suncheck.dataset1_scene(5.0, 0.0)
    ann = suncheck.synthesize_scene(scene, suncheck.SunPosition(180.0, 45.0))
    spec = suncheck.NoiseSpec(sigma_px=2.0, seed=9, trials=4)
    a = suncheck.add_noise(ann, spec, 2)
    b = suncheck.add_noise(ann, spec, 2)
    assert a.shadow_tip.x == b.shadow_tip.x
    c = suncheck.add_noise(ann, spec, 3)
    assert a.shadow_tip.x != c.shadow_tip.x


def test_errors_surface_as_python_exceptions():
    intr = suncheck.CameraIntrinsics.centered(1000.0, 1000, 800)
    with pytest.raises(suncheck.Error):
        suncheck.recover_ground_point(suncheck.PixelPoint(500.0, 400.0), intr, 0.0, 1.0)
    with pytest.raises(suncheck.Error):
        suncheck.Timestamp.parse("2017-01-01T00:00:00")


def test_roc_and_detectability():
    curve = suncheck.roc_curve([0.1, 0.2, 0.3], [5.0, 6.0, 7.0])
    assert curve.auc == pytest.approx(1.0)
    assert curve.optimal.tpr == 1.0 and curve.optimal.fpr == 0.0

    ctx = suncheck.ClaimedContext(
        suncheck.Timestamp(2017, 6, 21, 12, 0, 0, -4 * 60), 40.71, -74.0
    )
    minutes = suncheck.min_detectable_time_shift_minutes(ctx, suncheck.Thresholds())
    assert 11 <= minutes <= 21
