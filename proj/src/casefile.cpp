#include "suncheck/casefile.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include "suncheck/angles.hpp"

namespace suncheck {

using nlohmann::json;

CameraIntrinsics CaseRecord::intrinsics() const {
  if (!focal_px)
    throw Error(ErrorCode::Context, "record '" + image_id + "' has no focal length");
  CameraIntrinsics intr = CameraIntrinsics::centered(*focal_px, image_width, image_height);
  if (principal_point) {
    intr.u0 = principal_point->first;
    intr.v0 = principal_point->second;
  }
  intr.validate();
  return intr;
}

namespace {

double finite_number(const json& j, const std::string& where) {
  if (!j.is_number())
    throw Error(ErrorCode::Parse, where + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw Error(ErrorCode::Parse, where + " must be finite");
  return v;
}

PixelPoint pixel_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw Error(ErrorCode::Parse, where + " must be a [x, y] pair");
  return {finite_number(j[0], where + "[0]"), finite_number(j[1], where + "[1]")};
}

json pixel_to_json(const PixelPoint& p) { return json::array({p.x, p.y}); }

void check_bounds(const PixelPoint& p, const CaseRecord& rec, const std::string& where) {
  // Projections of distant points may leave the frame; 4x the image size is
  // the sanity limit for hand-made annotations.
  if (std::fabs(p.x) > 4.0 * rec.image_width || std::fabs(p.y) > 4.0 * rec.image_height)
    throw Error(ErrorCode::Parse, where + " lies further than 4x the image bounds");
}

CaseRecord record_from_json(const json& j, std::size_t index) {
  const std::string where = "cases[" + std::to_string(index) + "]";
  CaseRecord rec;
  rec.image_id = j.value("image_id", "case_" + std::to_string(index));

  const auto& size = j.at("image_size");
  if (!size.is_array() || size.size() != 2 || !size[0].is_number_integer() ||
      !size[1].is_number_integer())
    throw Error(ErrorCode::Parse, where + ".image_size must be [width, height]");
  rec.image_width = size[0].get<int>();
  rec.image_height = size[1].get<int>();
  if (rec.image_width <= 0 || rec.image_height <= 0)
    throw Error(ErrorCode::Parse, where + ".image_size must be positive");

  if (j.contains("focal_px")) rec.focal_px = finite_number(j["focal_px"], where + ".focal_px");
  if (j.contains("principal_point")) {
    const PixelPoint pp = pixel_from_json(j["principal_point"], where + ".principal_point");
    rec.principal_point = {pp.x, pp.y};
  }
  if (j.contains("pitch_deg")) rec.pitch_deg = finite_number(j["pitch_deg"], where + ".pitch_deg");
  if (j.contains("yaw_deg")) rec.yaw_deg = finite_number(j["yaw_deg"], where + ".yaw_deg");
  if (j.contains("camera_height"))
    rec.camera_height = finite_number(j["camera_height"], where + ".camera_height");

  const auto& ann = j.at("annotation");
  rec.annotation.shadow_tip = pixel_from_json(ann.at("shadow_tip"), where + ".shadow_tip");
  rec.annotation.object_base = pixel_from_json(ann.at("object_base"), where + ".object_base");
  if (ann.contains("object_top"))
    rec.annotation.object_top = pixel_from_json(ann["object_top"], where + ".object_top");
  check_bounds(rec.annotation.shadow_tip, rec, where + ".shadow_tip");
  check_bounds(rec.annotation.object_base, rec, where + ".object_base");
  if (rec.annotation.object_top) check_bounds(*rec.annotation.object_top, rec, where + ".object_top");

  const auto& claimed = j.at("claimed");
  rec.claimed.timestamp =
      Timestamp::parse_iso8601(claimed.at("timestamp").get<std::string>());
  rec.claimed.latitude_deg = finite_number(claimed.at("latitude_deg"), where + ".latitude_deg");
  rec.claimed.longitude_deg =
      finite_number(claimed.at("longitude_deg"), where + ".longitude_deg");
  rec.claimed.validate();

  if (j.contains("truth_sun")) {
    const auto& t = j["truth_sun"];
    rec.truth_sun = SunPosition{finite_number(t.at("azimuth_deg"), where + ".azimuth_deg"),
                                finite_number(t.at("altitude_deg"), where + ".altitude_deg")};
  }
  return rec;
}

json record_to_json(const CaseRecord& rec) {
  json j;
  j["image_id"] = rec.image_id;
  j["image_size"] = json::array({rec.image_width, rec.image_height});
  if (rec.focal_px) j["focal_px"] = *rec.focal_px;
  if (rec.principal_point)
    j["principal_point"] = json::array({rec.principal_point->first, rec.principal_point->second});
  j["pitch_deg"] = rec.pitch_deg;
  if (rec.yaw_deg) j["yaw_deg"] = *rec.yaw_deg;
  j["camera_height"] = rec.camera_height;
  json ann;
  ann["shadow_tip"] = pixel_to_json(rec.annotation.shadow_tip);
  ann["object_base"] = pixel_to_json(rec.annotation.object_base);
  if (rec.annotation.object_top) ann["object_top"] = pixel_to_json(*rec.annotation.object_top);
  j["annotation"] = ann;
  j["claimed"] = {{"timestamp", rec.claimed.timestamp.to_iso8601()},
                  {"latitude_deg", rec.claimed.latitude_deg},
                  {"longitude_deg", rec.claimed.longitude_deg}};
  if (rec.truth_sun)
    j["truth_sun"] = {{"azimuth_deg", rec.truth_sun->azimuth_deg},
                      {"altitude_deg", rec.truth_sun->altitude_deg}};
  return j;
}

}  // namespace

CaseFile parse_case_file(const json& j) {
  CaseFile file;
  file.schema_version = j.value("schema_version", 1);
  if (file.schema_version != 1)
    throw Error(ErrorCode::Parse,
                "unsupported schema_version " + std::to_string(file.schema_version));
  if (!j.contains("cases") || !j["cases"].is_array())
    throw Error(ErrorCode::Parse, "case file needs a 'cases' array");
  for (std::size_t i = 0; i < j["cases"].size(); ++i) {
    try {
      file.cases.push_back(record_from_json(j["cases"][i], i));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::Parse,
                  "cases[" + std::to_string(i) + "]: " + std::string(e.what()));
    }
  }
  return file;
}

CaseFile load_case_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, path + ": " + std::string(e.what()));
  }
  return parse_case_file(j);
}

json to_json(const CaseFile& file) {
  json j;
  j["schema_version"] = file.schema_version;
  j["cases"] = json::array();
  for (const CaseRecord& rec : file.cases) j["cases"].push_back(record_to_json(rec));
  return j;
}

void save_case_file(const CaseFile& file, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
  out << to_json(file).dump(2) << '\n';
}

CaseReport process_case(const CaseRecord& rec, const Thresholds& thresholds) {
  CaseReport report;
  report.image_id = rec.image_id;

  try {
    report.context_sun = sun_position_from_context(rec.claimed);
  } catch (const Error& e) {
    report.errors.emplace_back(e.what());
  }

  std::optional<CameraIntrinsics> intr;
  try {
    intr = rec.intrinsics();
  } catch (const Error& e) {
    report.errors.emplace_back(e.what());
  }

  if (intr) {
    if (rec.annotation.object_top) {
      try {
        report.shadow.altitude_deg = infer_altitude(rec.annotation, *intr, rec.pitch_deg);
      } catch (const Error& e) {
        report.errors.emplace_back(e.what());
      }
    }
    if (rec.yaw_deg) {
      try {
        const CameraPose pose{rec.pitch_deg, normalize_deg(*rec.yaw_deg), rec.camera_height};
        report.shadow.azimuth_deg = infer_azimuth(rec.annotation, *intr, pose);
      } catch (const Error& e) {
        report.errors.emplace_back(e.what());
      }
    }
  }

  if (report.context_sun) {
    try {
      report.verdict = validate(report.shadow, *report.context_sun, thresholds);
    } catch (const Error& e) {
      report.errors.emplace_back(e.what());
    }
  }
  return report;
}

json to_json(const SunPosition& position) {
  return {{"azimuth_deg", position.azimuth_deg}, {"altitude_deg", position.altitude_deg}};
}

json to_json(const SunEstimate& estimate) {
  json j = json::object();
  if (estimate.azimuth_deg) j["azimuth_deg"] = *estimate.azimuth_deg;
  if (estimate.altitude_deg) j["altitude_deg"] = *estimate.altitude_deg;
  return j;
}

json to_json(const Verdict& verdict) {
  json j;
  if (verdict.d_h) j["d_h"] = *verdict.d_h;
  if (verdict.d_A) j["d_A"] = *verdict.d_A;
  if (verdict.d_p) j["d_p"] = *verdict.d_p;
  j["consistent"] = verdict.consistent;
  j["rule_applied"] = verdict.rule_applied;
  return j;
}

json to_json(const CaseReport& report) {
  json j;
  j["image_id"] = report.image_id;
  j["shadow_sun"] = to_json(report.shadow);
  if (report.context_sun) j["context_sun"] = to_json(*report.context_sun);
  if (report.verdict) j["verdict"] = to_json(*report.verdict);
  j["errors"] = report.errors;
  return j;
}

json to_json(const RocCurve& curve) {
  json pts = json::array();
  for (const RocPoint& p : curve.points)
    pts.push_back({{"threshold", p.threshold}, {"fpr", p.fpr}, {"tpr", p.tpr}});
  return {{"points", pts},
          {"auc", curve.auc},
          {"optimal",
           {{"threshold", curve.optimal.threshold},
            {"fpr", curve.optimal.fpr},
            {"tpr", curve.optimal.tpr}}}};
}

json to_json(const EvalReport& report) {
  json j;
  j["thresholds"] = {{"altitude_threshold_deg", report.thresholds.altitude_threshold_deg},
                     {"position_threshold_deg", report.thresholds.position_threshold_deg}};
  j["tpr"] = report.tpr;
  j["overall_fpr"] = report.overall_fpr;
  j["attacks"] = json::array();
  for (const AttackReport& ar : report.attacks) {
    j["attacks"].push_back({{"kind", to_string(ar.kind)},
                            {"fpr_per_rep", ar.fpr_per_rep},
                            {"mean_fpr", ar.mean_fpr},
                            {"roc_d_h", to_json(ar.roc_dh)},
                            {"roc_d_A", to_json(ar.roc_dA)},
                            {"roc_d_p", to_json(ar.roc_dp)}});
  }
  j["pooled"] = {{"roc_d_h", to_json(report.pooled_dh)},
                 {"roc_d_A", to_json(report.pooled_dA)},
                 {"roc_d_p", to_json(report.pooled_dp)},
                 {"combined_rule", to_json(report.combined_curve)}};
  return j;
}

json to_json(const DetectabilityTables& tables) {
  json j;
  j["time_shift_minutes"] = json::array();
  for (const DetectabilityCell& c : tables.time_shift_minutes)
    j["time_shift_minutes"].push_back({{"date", c.date}, {"time", c.time}, {"minutes", c.value}});
  j["date_shift_days"] = json::array();
  for (const DetectabilityCell& c : tables.date_shift_days)
    j["date_shift_days"].push_back({{"date", c.date}, {"time", c.time}, {"days", c.value}});
  return j;
}

void write_roc_csv(std::ostream& os, const std::string& variable, const RocCurve& curve) {
  os << "variable,threshold,TPR,FPR\n";
  char line[160];
  for (const RocPoint& p : curve.points) {
    std::snprintf(line, sizeof(line), "%s,%.6f,%.6f,%.6f\n", variable.c_str(), p.threshold,
                  p.tpr, p.fpr);
    os << line;
  }
}

}  // namespace suncheck
