#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "suncheck/evaluate.hpp"

namespace suncheck {

// One photo record of the sidecar file: annotated pixel coordinates plus the
// claimed capture metadata. No pixel data is ever read.
struct CaseRecord {
  std::string image_id;
  int image_width = 0;
  int image_height = 0;
  std::optional<double> focal_px;
  std::optional<std::pair<double, double>> principal_point;  // defaults to centre
  double pitch_deg = 0.0;
  std::optional<double> yaw_deg;
  double camera_height = 1.0;
  ShadowAnnotation annotation;
  ClaimedContext claimed;
  std::optional<SunPosition> truth_sun;  // attached by the synthesizer

  CameraIntrinsics intrinsics() const;  // throws if focal_px is missing
};

struct CaseFile {
  int schema_version = 1;
  std::vector<CaseRecord> cases;
};

// Outcome of the full pipeline on one record. Solver or context failures are
// reported per record instead of aborting the batch.
struct CaseReport {
  std::string image_id;
  SunEstimate shadow;
  std::optional<SunPosition> context_sun;
  std::optional<Verdict> verdict;
  std::vector<std::string> errors;
};

CaseReport process_case(const CaseRecord& rec, const Thresholds& thresholds);

CaseFile parse_case_file(const nlohmann::json& j);
CaseFile load_case_file(const std::string& path);
nlohmann::json to_json(const CaseFile& file);
void save_case_file(const CaseFile& file, const std::string& path);

nlohmann::json to_json(const CaseReport& report);
nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const SunPosition& position);
nlohmann::json to_json(const SunEstimate& estimate);
nlohmann::json to_json(const RocCurve& curve);
nlohmann::json to_json(const EvalReport& report);
nlohmann::json to_json(const DetectabilityTables& tables);

// Fixed-header CSV for threshold sweeps: variable,threshold,TPR,FPR with six
// decimal places.
void write_roc_csv(std::ostream& os, const std::string& variable, const RocCurve& curve);

}  // namespace suncheck
