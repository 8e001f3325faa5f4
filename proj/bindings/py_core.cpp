#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "suncheck/casefile.hpp"

namespace py = pybind11;
using namespace suncheck;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Shadow-based sun position estimation and capture-metadata validation";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  py::class_<PixelPoint>(m, "PixelPoint")
      .def(py::init<>())
      .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
      .def_readwrite("x", &PixelPoint::x)
      .def_readwrite("y", &PixelPoint::y)
      .def("__repr__", [](const PixelPoint& p) {
        return "PixelPoint(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
      });

  py::class_<WorldPoint>(m, "WorldPoint")
      .def(py::init<>())
      .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
      .def_readwrite("x", &WorldPoint::x)
      .def_readwrite("y", &WorldPoint::y)
      .def_readwrite("z", &WorldPoint::z)
      .def("__repr__", [](const WorldPoint& p) {
        return "WorldPoint(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ", " +
               std::to_string(p.z) + ")";
      });

  py::class_<CameraIntrinsics>(m, "CameraIntrinsics")
      .def(py::init<>())
      .def(py::init<double, double, double, int, int>(), py::arg("focal_px"), py::arg("u0"),
           py::arg("v0"), py::arg("width"), py::arg("height"))
      .def_static("centered", &CameraIntrinsics::centered, py::arg("focal_px"),
                  py::arg("width"), py::arg("height"))
      .def_readwrite("focal_px", &CameraIntrinsics::focal_px)
      .def_readwrite("u0", &CameraIntrinsics::u0)
      .def_readwrite("v0", &CameraIntrinsics::v0)
      .def_readwrite("width", &CameraIntrinsics::width)
      .def_readwrite("height", &CameraIntrinsics::height);

  py::class_<CameraPose>(m, "CameraPose")
      .def(py::init<>())
      .def(py::init<double, double, double>(), py::arg("pitch_deg"), py::arg("yaw_deg"),
           py::arg("height") = 1.0)
      .def_readwrite("pitch_deg", &CameraPose::pitch_deg)
      .def_readwrite("yaw_deg", &CameraPose::yaw_deg)
      .def_readwrite("height", &CameraPose::height);

  py::class_<ShadowAnnotation>(m, "ShadowAnnotation")
      .def(py::init<>())
      .def(py::init<PixelPoint, PixelPoint, std::optional<PixelPoint>>(),
           py::arg("shadow_tip"), py::arg("object_base"),
           py::arg("object_top") = std::nullopt)
      .def_readwrite("shadow_tip", &ShadowAnnotation::shadow_tip)
      .def_readwrite("object_base", &ShadowAnnotation::object_base)
      .def_readwrite("object_top", &ShadowAnnotation::object_top);

  py::class_<SunPosition>(m, "SunPosition")
      .def(py::init<>())
      .def(py::init<double, double>(), py::arg("azimuth_deg"), py::arg("altitude_deg"))
      .def_readwrite("azimuth_deg", &SunPosition::azimuth_deg)
      .def_readwrite("altitude_deg", &SunPosition::altitude_deg)
      .def("__repr__", [](const SunPosition& s) {
        return "SunPosition(azimuth_deg=" + std::to_string(s.azimuth_deg) +
               ", altitude_deg=" + std::to_string(s.altitude_deg) + ")";
      });

  py::class_<SunEstimate>(m, "SunEstimate")
      .def(py::init<>())
      .def_readwrite("azimuth_deg", &SunEstimate::azimuth_deg)
      .def_readwrite("altitude_deg", &SunEstimate::altitude_deg);

  py::class_<Timestamp>(m, "Timestamp")
      .def(py::init<>())
      .def(py::init<int, int, int, int, int, int, int>(), py::arg("year"), py::arg("month"),
           py::arg("day"), py::arg("hour"), py::arg("minute") = 0, py::arg("second") = 0,
           py::arg("utc_offset_minutes") = 0)
      .def_static("parse", &Timestamp::parse_iso8601, py::arg("text"))
      .def("isoformat", &Timestamp::to_iso8601)
      .def("day_of_year", &Timestamp::day_of_year)
      .def("shifted_by_minutes", &Timestamp::shifted_by_minutes, py::arg("minutes"))
      .def("shifted_by_days", &Timestamp::shifted_by_days, py::arg("days"))
      .def_readwrite("year", &Timestamp::year)
      .def_readwrite("month", &Timestamp::month)
      .def_readwrite("day", &Timestamp::day)
      .def_readwrite("hour", &Timestamp::hour)
      .def_readwrite("minute", &Timestamp::minute)
      .def_readwrite("second", &Timestamp::second)
      .def_readwrite("utc_offset_minutes", &Timestamp::utc_offset_minutes)
      .def("__repr__", [](const Timestamp& t) { return "Timestamp(" + t.to_iso8601() + ")"; });

  py::class_<ClaimedContext>(m, "ClaimedContext")
      .def(py::init<>())
      .def(py::init<Timestamp, double, double>(), py::arg("timestamp"),
           py::arg("latitude_deg"), py::arg("longitude_deg"))
      .def_readwrite("timestamp", &ClaimedContext::timestamp)
      .def_readwrite("latitude_deg", &ClaimedContext::latitude_deg)
      .def_readwrite("longitude_deg", &ClaimedContext::longitude_deg);

  py::class_<SolarAngles>(m, "SolarAngles")
      .def_readonly("solar_time_h", &SolarAngles::solar_time_h)
      .def_readonly("hour_angle_deg", &SolarAngles::hour_angle_deg)
      .def_readonly("declination_deg", &SolarAngles::declination_deg)
      .def_readonly("equation_of_time_min", &SolarAngles::equation_of_time_min);

  py::class_<Thresholds>(m, "Thresholds")
      .def(py::init<>())
      .def(py::init<double, double, std::optional<double>>(),
           py::arg("altitude_threshold_deg") = 5.0, py::arg("position_threshold_deg") = 9.4,
           py::arg("azimuth_threshold_deg") = std::nullopt)
      .def_readwrite("altitude_threshold_deg", &Thresholds::altitude_threshold_deg)
      .def_readwrite("position_threshold_deg", &Thresholds::position_threshold_deg)
      .def_readwrite("azimuth_threshold_deg", &Thresholds::azimuth_threshold_deg);

  py::class_<Verdict>(m, "Verdict")
      .def_readonly("d_h", &Verdict::d_h)
      .def_readonly("d_A", &Verdict::d_A)
      .def_readonly("d_p", &Verdict::d_p)
      .def_readonly("consistent", &Verdict::consistent)
      .def_readonly("rule_applied", &Verdict::rule_applied);

  py::class_<SceneSpec>(m, "SceneSpec")
      .def(py::init<>())
      .def_readwrite("object_height", &SceneSpec::object_height)
      .def_readwrite("base_position", &SceneSpec::base_position)
      .def_readwrite("intrinsics", &SceneSpec::intrinsics)
      .def_readwrite("pose", &SceneSpec::pose);

  py::class_<NoiseSpec>(m, "NoiseSpec")
      .def(py::init<>())
      .def(py::init<double, std::uint64_t, int>(), py::arg("sigma_px"), py::arg("seed") = 0,
           py::arg("trials") = 1)
      .def_readwrite("sigma_px", &NoiseSpec::sigma_px)
      .def_readwrite("seed", &NoiseSpec::seed)
      .def_readwrite("trials", &NoiseSpec::trials);

  py::class_<SyntheticFrame>(m, "SyntheticFrame")
      .def_readonly("context", &SyntheticFrame::context)
      .def_readonly("truth_sun", &SyntheticFrame::truth_sun)
      .def_readonly("annotation", &SyntheticFrame::annotation);

  py::class_<RocPoint>(m, "RocPoint")
      .def_readonly("threshold", &RocPoint::threshold)
      .def_readonly("fpr", &RocPoint::fpr)
      .def_readonly("tpr", &RocPoint::tpr);

  py::class_<RocCurve>(m, "RocCurve")
      .def_readonly("points", &RocCurve::points)
      .def_readonly("auc", &RocCurve::auc)
      .def_readonly("optimal", &RocCurve::optimal);

  // projective camera
  m.def("rotation_matrix", &rotation_matrix, py::arg("pitch_deg"));
  m.def("projection_matrix", &projection_matrix, py::arg("intrinsics"), py::arg("pitch_deg"));
  m.def("project",
        py::overload_cast<const CameraIntrinsics&, double, const WorldPoint&>(&project),
        py::arg("intrinsics"), py::arg("pitch_deg"), py::arg("point"));

  // shadow solver
  m.def("recover_ground_point", &recover_ground_point, py::arg("pixel"), py::arg("intrinsics"),
        py::arg("pitch_deg"), py::arg("camera_height"));
  m.def("recover_top_point", &recover_top_point, py::arg("top"), py::arg("base_world"),
        py::arg("intrinsics"), py::arg("pitch_deg"));
  m.def("infer_altitude", &infer_altitude, py::arg("annotation"), py::arg("intrinsics"),
        py::arg("pitch_deg"));
  m.def("infer_azimuth", &infer_azimuth, py::arg("annotation"), py::arg("intrinsics"),
        py::arg("pose"));
  m.def("infer_sun_position", &infer_sun_position, py::arg("annotation"),
        py::arg("intrinsics"), py::arg("pose"));

  // ephemeris
  m.def("equation_of_time", &equation_of_time, py::arg("day_of_year"));
  m.def("declination", &declination, py::arg("day_of_year"));
  m.def("solar_time_hours", &solar_time_hours, py::arg("context"));
  m.def("hour_angle_deg", &hour_angle_deg, py::arg("solar_time_h"));
  m.def("solar_angles", &solar_angles, py::arg("context"));
  m.def("sun_position_from_context", &sun_position_from_context, py::arg("context"));

  // consistency validation
  m.def("altitude_distance", &altitude_distance, py::arg("shadow_altitude_deg"),
        py::arg("context_altitude_deg"));
  m.def("azimuth_distance", &azimuth_distance, py::arg("shadow_azimuth_deg"),
        py::arg("context_azimuth_deg"));
  m.def("position_distance", &position_distance, py::arg("d_azimuth"), py::arg("d_altitude"));
  m.def("validate", &validate, py::arg("shadow"), py::arg("context"), py::arg("thresholds"));

  // scene synthesis
  m.def("shadow_tip_world", &shadow_tip_world, py::arg("scene"), py::arg("sun"));
  m.def("synthesize_scene", &synthesize_scene, py::arg("scene"), py::arg("sun"),
        py::arg("require_in_frame") = false);
  m.def("add_noise", &add_noise, py::arg("annotation"), py::arg("noise"),
        py::arg("trial_index"));
  m.def("dataset1_scene", &dataset1_scene, py::arg("object_distance_m") = 5.0,
        py::arg("pitch_deg") = 0.0);
  m.def("make_dataset1", &make_dataset1, py::arg("object_distance_m") = 5.0,
        py::arg("pitch_deg") = 0.0);

  // evaluation harness
  m.def("roc_curve", &roc_curve, py::arg("positives"), py::arg("negatives"));
  m.def("min_detectable_time_shift_minutes", &min_detectable_time_shift_minutes,
        py::arg("context"), py::arg("thresholds"), py::arg("max_minutes") = 720);
  m.def("min_detectable_date_shift_days", &min_detectable_date_shift_days,
        py::arg("context"), py::arg("thresholds"), py::arg("max_days") = 365);
}
