"""Shadow-based sun position estimation and capture-metadata validation."""

from suncheck._core import (
    CameraIntrinsics,
    CameraPose,
    ClaimedContext,
    Error,
    NoiseSpec,
    PixelPoint,
    RocCurve,
    RocPoint,
    SceneSpec,
    ShadowAnnotation,
    SolarAngles,
    SunEstimate,
    SunPosition,
    SyntheticFrame,
    Thresholds,
    Timestamp,
    Verdict,
    WorldPoint,
    add_noise,
    altitude_distance,
    azimuth_distance,
    dataset1_scene,
    declination,
    equation_of_time,
    hour_angle_deg,
    infer_altitude,
    infer_azimuth,
    infer_sun_position,
    make_dataset1,
    min_detectable_date_shift_days,
    min_detectable_time_shift_minutes,
    position_distance,
    project,
    projection_matrix,
    recover_ground_point,
    recover_top_point,
    roc_curve,
    rotation_matrix,
    shadow_tip_world,
    solar_angles,
    solar_time_hours,
    sun_position_from_context,
    synthesize_scene,
    validate,
)

__version__ = "0.1.0"
