// suncheck: decide whether a photo's claimed capture time and GPS location
// are consistent with the sun position implied by one vertical object and
// its shadow. Works on annotation sidecar files; never reads pixels.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "suncheck/angles.hpp"
#include "suncheck/casefile.hpp"
#include "suncheck/rng.hpp"

namespace {

using nlohmann::json;
using namespace suncheck;

constexpr int kExitConsistent = 0;
constexpr int kExitInconsistent = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

Thresholds parse_thresholds(const std::string& text) {
  Thresholds th;
  if (text.empty()) return th;
  double h = 0.0, p = 0.0;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> h >> comma >> p) || comma != ',')
    throw Error(ErrorCode::Parse, "--thresholds expects 'h,p' (degrees)");
  th.altitude_threshold_deg = h;
  th.position_threshold_deg = p;
  th.validate();
  return th;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
  out << text;
}

std::string csv_cell(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", *v);
  return buf;
}

int cmd_verify(const std::string& case_path, const std::string& thresholds_text,
               const std::string& format, const std::string& out_path) {
  const Thresholds th = parse_thresholds(thresholds_text);
  const CaseFile file = load_case_file(case_path);

  std::vector<CaseReport> reports;
  reports.reserve(file.cases.size());
  for (const CaseRecord& rec : file.cases) reports.push_back(process_case(rec, th));

  int consistent = 0, inconsistent = 0, errored = 0;
  for (const CaseReport& r : reports) {
    if (r.verdict && r.errors.empty())
      (r.verdict->consistent ? consistent : inconsistent)++;
    else
      errored++;
  }

  if (format == "csv") {
    std::ostringstream os;
    os << "image_id,d_h,d_A,d_p,consistent,rule,errors\n";
    for (const CaseReport& r : reports) {
      std::string errs;
      for (const std::string& e : r.errors) errs += (errs.empty() ? "" : "; ") + e;
      os << r.image_id << ',';
      if (r.verdict)
        os << csv_cell(r.verdict->d_h) << ',' << csv_cell(r.verdict->d_A) << ','
           << csv_cell(r.verdict->d_p) << ',' << (r.verdict->consistent ? "true" : "false")
           << ',' << r.verdict->rule_applied;
      else
        os << ",,,,";
      os << ",\"" << errs << "\"\n";
    }
    write_text(out_path, os.str());
  } else {
    json j;
    j["thresholds"] = {{"altitude_threshold_deg", th.altitude_threshold_deg},
                       {"position_threshold_deg", th.position_threshold_deg}};
    j["cases"] = json::array();
    for (const CaseReport& r : reports) j["cases"].push_back(to_json(r));
    j["summary"] = {{"consistent", consistent},
                    {"inconsistent", inconsistent},
                    {"errors", errored}};
    write_text(out_path, j.dump(2) + "\n");
  }
  return (inconsistent == 0 && errored == 0) ? kExitConsistent : kExitInconsistent;
}

int cmd_infer(const std::string& case_path, const std::string& format,
              const std::string& out_path) {
  const CaseFile file = load_case_file(case_path);
  // Verdict-free pass: shadow inference only.
  json cases = json::array();
  std::ostringstream csv;
  csv << "image_id,azimuth_deg,altitude_deg,errors\n";
  for (const CaseRecord& rec : file.cases) {
    CaseReport r;
    r.image_id = rec.image_id;
    try {
      const CameraIntrinsics intr = rec.intrinsics();
      if (rec.annotation.object_top)
        r.shadow.altitude_deg = infer_altitude(rec.annotation, intr, rec.pitch_deg);
      if (rec.yaw_deg) {
        const CameraPose pose{rec.pitch_deg, normalize_deg(*rec.yaw_deg), rec.camera_height};
        r.shadow.azimuth_deg = infer_azimuth(rec.annotation, intr, pose);
      }
    } catch (const Error& e) {
      r.errors.emplace_back(e.what());
    }
    json jr;
    jr["image_id"] = r.image_id;
    jr["shadow_sun"] = to_json(r.shadow);
    jr["errors"] = r.errors;
    cases.push_back(jr);
    std::string errs;
    for (const std::string& e : r.errors) errs += (errs.empty() ? "" : "; ") + e;
    csv << r.image_id << ',' << csv_cell(r.shadow.azimuth_deg) << ','
        << csv_cell(r.shadow.altitude_deg) << ",\"" << errs << "\"\n";
  }
  if (format == "csv")
    write_text(out_path, csv.str());
  else
    write_text(out_path, json{{"cases", cases}}.dump(2) + "\n");
  return kExitConsistent;
}

int cmd_ephemeris(const std::string& time_text, double lat, double lon,
                  const std::string& format, const std::string& out_path) {
  ClaimedContext ctx;
  ctx.timestamp = Timestamp::parse_iso8601(time_text);
  ctx.latitude_deg = lat;
  ctx.longitude_deg = lon;
  const SolarAngles angles = solar_angles(ctx);
  const SunPosition sun = sun_position_from_context(ctx);
  if (format == "csv") {
    std::ostringstream os;
    os << "azimuth_deg,altitude_deg,declination_deg,hour_angle_deg,solar_time_h,"
          "equation_of_time_min\n";
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f\n", sun.azimuth_deg,
                  sun.altitude_deg, angles.declination_deg, angles.hour_angle_deg,
                  angles.solar_time_h, angles.equation_of_time_min);
    write_text(out_path, os.str() + buf);
  } else {
    json j = to_json(sun);
    j["declination_deg"] = angles.declination_deg;
    j["hour_angle_deg"] = angles.hour_angle_deg;
    j["solar_time_h"] = angles.solar_time_h;
    j["equation_of_time_min"] = angles.equation_of_time_min;
    write_text(out_path, j.dump(2) + "\n");
  }
  return kExitConsistent;
}

struct SynthOptions {
  bool dataset1 = false;
  double distance_m = 5.0;
  double pitch_deg = 0.0;
  std::string sigmas = "0";
  int trials = 1;
  std::uint64_t seed = 0;
  bool require_in_frame = false;
  std::string out_path;
  // custom scene
  std::string timestamp;
  double lat = 0.0, lon = 0.0;
  double focal = 3351.6;
  int width = 4032, height = 3024;
  double camera_height = 1.6;
  double yaw = 0.0;
  double object_height = 1.0;
  double base_x = 0.0;
};

std::vector<double> parse_sigma_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad --sigma entry '" + item + "'");
    }
    if (out.back() < 0.0) throw Error(ErrorCode::Parse, "--sigma must be non-negative");
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "--sigma list is empty");
  return out;
}

CaseRecord record_from_frame(const SceneSpec& scene, const SyntheticFrame& frame,
                             const std::string& id) {
  CaseRecord rec;
  rec.image_id = id;
  rec.image_width = scene.intrinsics.width;
  rec.image_height = scene.intrinsics.height;
  rec.focal_px = scene.intrinsics.focal_px;
  rec.principal_point = {{scene.intrinsics.u0, scene.intrinsics.v0}};
  rec.pitch_deg = scene.pose.pitch_deg;
  rec.yaw_deg = scene.pose.yaw_deg;
  rec.camera_height = scene.pose.height;
  rec.annotation = frame.annotation;
  rec.claimed = frame.context;
  rec.truth_sun = frame.truth_sun;
  return rec;
}

int cmd_synth(const SynthOptions& opt) {
  const std::vector<double> sigmas = parse_sigma_list(opt.sigmas);
  if (opt.trials < 1) throw Error(ErrorCode::Parse, "--trials must be at least 1");

  SceneSpec scene;
  std::vector<SyntheticFrame> frames;
  if (opt.dataset1) {
    scene = dataset1_scene(opt.distance_m, opt.pitch_deg);
    frames = make_dataset1(opt.distance_m, opt.pitch_deg);
  } else {
    if (opt.timestamp.empty())
      throw Error(ErrorCode::Parse, "--timestamp/--lat/--lon are required without --dataset1");
    scene = SceneSpec{};
    scene.object_height = opt.object_height;
    scene.intrinsics = CameraIntrinsics::centered(opt.focal, opt.width, opt.height);
    scene.pose = CameraPose{opt.pitch_deg, normalize_deg(opt.yaw), opt.camera_height};
    scene.base_position = {opt.base_x, -opt.camera_height, opt.distance_m};
    SyntheticFrame frame;
    frame.context.timestamp = Timestamp::parse_iso8601(opt.timestamp);
    frame.context.latitude_deg = opt.lat;
    frame.context.longitude_deg = opt.lon;
    frame.truth_sun = sun_position_from_context(frame.context);
    frame.annotation = synthesize_scene(scene, frame.truth_sun, opt.require_in_frame);
    frames.push_back(frame);
  }

  if (opt.require_in_frame) {
    std::vector<std::string> offending;
    for (std::size_t i = 0; i < frames.size(); ++i) {
      try {
        synthesize_scene(scene, frames[i].truth_sun, true);
      } catch (const Error&) {
        offending.push_back("frame_" + std::to_string(i));
      }
    }
    if (!offending.empty()) {
      std::string list;
      for (const std::string& s : offending) list += (list.empty() ? "" : ", ") + s;
      throw Error(ErrorCode::SceneInfeasible, "annotations leave the frame: " + list);
    }
  }

  CaseFile file;
  const bool clean_only = sigmas.size() == 1 && sigmas[0] == 0.0 && opt.trials == 1;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    char base_id[32];
    std::snprintf(base_id, sizeof(base_id), "frame_%03zu", i);
    if (clean_only) {
      file.cases.push_back(record_from_frame(scene, frames[i], base_id));
      continue;
    }
    for (double sigma : sigmas) {
      const NoiseSpec noise{sigma, derive_seed(opt.seed, i), opt.trials};
      for (int t = 0; t < opt.trials; ++t) {
        SyntheticFrame noisy = frames[i];
        noisy.annotation = add_noise(frames[i].annotation, noise, t);
        char id[64];
        std::snprintf(id, sizeof(id), "%s_s%g_t%03d", base_id, sigma, t);
        file.cases.push_back(record_from_frame(scene, noisy, id));
      }
    }
  }

  write_text(opt.out_path, to_json(file).dump(2) + "\n");
  return kExitConsistent;
}

struct EvalOptions {
  std::uint64_t seed = 1;
  int count = 200;
  double sigma = 2.0;
  int reps = 5;
  double distance_m = 5.0;
  std::string thresholds_text;
  std::string out_dir;
  std::string format = "json";
  bool tables = true;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
  out << text;
}

int cmd_eval(const EvalOptions& opt) {
  if (opt.count < 1) throw Error(ErrorCode::Parse, "--count must be positive");
  const Thresholds th = parse_thresholds(opt.thresholds_text);

  CorpusSpec spec;
  spec.seed = opt.seed;
  spec.genuine_count = opt.count;
  spec.noise_sigma_px = opt.sigma;
  spec.repetitions = opt.reps;
  spec.object_distance_m = opt.distance_m;

  const SyntheticCorpus corpus = build_synthetic_corpus(spec);
  const EvalReport report = run_evaluation(corpus, th);

  json j = to_json(report);
  if (opt.tables) j["nyc_detectability"] = to_json(nyc_detectability_tables(th));

  if (!opt.out_dir.empty()) {
    write_file(opt.out_dir + "/eval_report.json", j.dump(2) + "\n");
    const auto dump_csv = [&](const std::string& name, const std::string& var,
                              const RocCurve& curve) {
      std::ostringstream os;
      write_roc_csv(os, var, curve);
      write_file(opt.out_dir + "/" + name, os.str());
    };
    for (const AttackReport& ar : report.attacks) {
      const std::string kind = to_string(ar.kind);
      dump_csv("roc_" + kind + "_d_h.csv", "d_h", ar.roc_dh);
      dump_csv("roc_" + kind + "_d_A.csv", "d_A", ar.roc_dA);
      dump_csv("roc_" + kind + "_d_p.csv", "d_p", ar.roc_dp);
    }
    dump_csv("roc_all_d_h.csv", "d_h", report.pooled_dh);
    dump_csv("roc_all_d_A.csv", "d_A", report.pooled_dA);
    dump_csv("roc_all_d_p.csv", "d_p", report.pooled_dp);
    dump_csv("roc_all_combined.csv", "d_h_with_d_p_gate", report.combined_curve);
  }

  if (opt.format == "csv") {
    std::ostringstream os;
    write_roc_csv(os, "d_h_with_d_p_gate", report.combined_curve);
    std::cout << os.str();
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return kExitConsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sun-position consistency checks for photo capture metadata"};
  app.require_subcommand(1);

  // verify
  std::string v_case, v_thresholds, v_format = "json", v_out;
  CLI::App* verify = app.add_subcommand("verify", "Validate claimed time/location per case");
  verify->add_option("case_file", v_case, "annotation sidecar JSON")->required();
  verify->add_option("--thresholds", v_thresholds, "altitude,position thresholds in degrees");
  verify->add_option("--format", v_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", v_out, "output path (default stdout)");

  // infer
  std::string i_case, i_format = "json", i_out;
  CLI::App* infer = app.add_subcommand("infer", "Shadow-inferred sun positions only");
  infer->add_option("case_file", i_case, "annotation sidecar JSON")->required();
  infer->add_option("--format", i_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  infer->add_option("--out", i_out, "output path (default stdout)");

  // ephemeris
  std::string e_time, e_format = "json", e_out;
  double e_lat = 0.0, e_lon = 0.0;
  CLI::App* ephem = app.add_subcommand("ephemeris", "Sun position for a claimed context");
  ephem->add_option("--time", e_time, "ISO 8601 timestamp with UTC offset")->required();
  ephem->add_option("--lat", e_lat, "latitude, degrees north")->required();
  ephem->add_option("--lon", e_lon, "longitude, degrees east")->required();
  ephem->add_option("--format", e_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  ephem->add_option("--out", e_out, "output path (default stdout)");

  // synth
  SynthOptions s;
  CLI::App* synth = app.add_subcommand("synth", "Generate synthetic annotated cases");
  synth->add_flag("--dataset1", s.dataset1, "84-frame NYC 2017-03-21 replication");
  synth->add_option("--distance", s.distance_m, "object distance, metres (default 5)");
  synth->add_option("--pitch", s.pitch_deg, "camera pitch, degrees");
  synth->add_option("--sigma", s.sigmas, "comma list of pixel noise levels (default 0)");
  synth->add_option("--trials", s.trials, "noisy trials per frame and level");
  synth->add_option("--seed", s.seed, "noise stream seed");
  synth->add_flag("--require-in-frame", s.require_in_frame, "fail if points leave the frame");
  synth->add_option("--out", s.out_path, "output case file (default stdout)");
  synth->add_option("--timestamp", s.timestamp, "claimed ISO timestamp (custom scene)");
  synth->add_option("--lat", s.lat, "claimed latitude (custom scene)");
  synth->add_option("--lon", s.lon, "claimed longitude (custom scene)");
  synth->add_option("--focal", s.focal, "focal length, pixels");
  synth->add_option("--width", s.width, "image width, pixels");
  synth->add_option("--height", s.height, "image height, pixels");
  synth->add_option("--camera-height", s.camera_height, "camera height, metres");
  synth->add_option("--yaw", s.yaw, "camera yaw, degrees");
  synth->add_option("--object-height", s.object_height, "object height, metres");
  synth->add_option("--base-x", s.base_x, "object base lateral offset, metres");

  // eval
  EvalOptions ev;
  CLI::App* eval = app.add_subcommand("eval", "Attack/ROC evaluation on a seeded corpus");
  eval->add_option("--seed", ev.seed, "corpus and attack seed");
  eval->add_option("--count", ev.count, "genuine sample count (default 200)");
  eval->add_option("--sigma", ev.sigma, "annotation noise, pixels (default 2)");
  eval->add_option("--reps", ev.reps, "attack regenerations (default 5)");
  eval->add_option("--distance", ev.distance_m, "object distance, metres");
  eval->add_option("--thresholds", ev.thresholds_text, "altitude,position thresholds");
  eval->add_option("--out-dir", ev.out_dir, "directory for JSON/CSV reports");
  eval->add_option("--format", ev.format, "json|csv stdout format")
      ->check(CLI::IsMember({"json", "csv"}));
  eval->add_flag("!--no-tables", ev.tables, "skip detectability tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(v_case, v_thresholds, v_format, v_out);
    if (infer->parsed()) return cmd_infer(i_case, i_format, i_out);
    if (ephem->parsed()) return cmd_ephemeris(e_time, e_lat, e_lon, e_format, e_out);
    if (synth->parsed()) return cmd_synth(s);
    if (eval->parsed()) return cmd_eval(ev);
  } catch (const Error& e) {
    std::cerr << "suncheck: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "suncheck: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
