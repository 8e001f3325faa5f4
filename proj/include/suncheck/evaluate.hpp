#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "suncheck/ephemeris.hpp"
#include "suncheck/synth.hpp"
#include "suncheck/validate.hpp"

namespace suncheck {

enum class AttackKind { TimeOfDay, Date, Latitude };

const char* to_string(AttackKind kind);

struct AttackSpec {
  AttackKind kind = AttackKind::TimeOfDay;
  std::uint64_t rng_seed = 0;
  int count = 200;
  int repetitions = 5;
};

// Falsify exactly one metadata field of the truth context:
//   time-of-day -> uniform in [08:00, 17:00]
//   date        -> uniform over the days of the same year
//   latitude    -> uniform in [25, 50] degrees north
// Deterministic per (spec.rng_seed, index).
ClaimedContext generate_attack(const ClaimedContext& truth, const AttackSpec& spec,
                               int index);

struct ScoreTriple {
  std::optional<double> d_h;
  std::optional<double> d_A;
  std::optional<double> d_p;
};

// Distances between a shadow-inferred estimate and the position implied by
// the claimed context.
ScoreTriple score(const SunEstimate& shadow, const ClaimedContext& claimed);

struct RocPoint {
  double threshold = 0.0;
  double fpr = 0.0;
  double tpr = 0.0;
};

struct RocCurve {
  std::vector<RocPoint> points;  // threshold ascending; TPR/FPR non-decreasing
  double auc = 0.0;
  RocPoint optimal;  // point closest to the ideal (FPR, TPR) = (0, 1)
};

// Acceptance means distance <= threshold, so genuine samples (small
// distances) are the positives. Thresholds sweep the midpoints between
// observed values plus sentinels at 0 and infinity.
RocCurve roc_curve(const std::vector<double>& positives,
                   const std::vector<double>& negatives);

// Same sweep with the FPR at each threshold averaged over repeated
// attack-set regenerations.
RocCurve roc_curve_averaged(const std::vector<double>& positives,
                            const std::vector<std::vector<double>>& negative_reps);

struct HpPair {
  double d_h = 0.0;
  double d_p = 0.0;
};

// Sweep the d_h threshold while keeping a fixed d_p gate; the gate caps the
// attainable TPR.
RocCurve combined_rule_sweep(const std::vector<HpPair>& positives,
                             const std::vector<std::vector<HpPair>>& negative_reps,
                             double dp_gate);

// Smallest clock shift (1-minute grid, both directions) that the validator
// flags as inconsistent, treating the base sun position as exact.
int min_detectable_time_shift_minutes(const ClaimedContext& base, const Thresholds& th,
                                      int max_minutes = 720);

// Same on a 1-day grid over the calendar date.
int min_detectable_date_shift_days(const ClaimedContext& base, const Thresholds& th,
                                   int max_days = 365);

struct NoiseStudyPoint {
  double sigma_px = 0.0;
  double mean_abs_altitude_error_deg = 0.0;
  double mean_abs_azimuth_error_deg = 0.0;
};

// Monte-Carlo noise resilience: per noise level, the mean absolute angle
// errors over all frames and trials. The per-(frame, trial) noise streams are
// shared across levels, so errors scale smoothly with sigma.
std::vector<NoiseStudyPoint> noise_study(const std::vector<SyntheticFrame>& frames,
                                         const SceneSpec& scene,
                                         const std::vector<double>& sigma_levels,
                                         int trials, std::uint64_t seed);

struct CorpusSpec {
  std::uint64_t seed = 1;
  int genuine_count = 200;
  double noise_sigma_px = 2.0;
  int repetitions = 5;
  double object_distance_m = 5.0;
  double min_altitude_deg = 10.0;  // genuine frames keep the sun above this
};

struct CorpusSample {
  ClaimedContext context;
  SunPosition truth_sun;
  SceneSpec scene;
  ShadowAnnotation annotation;  // noisy pixels as "annotated"
  SunEstimate shadow;           // inferred back from the noisy annotation
};

struct SyntheticCorpus {
  CorpusSpec spec;
  std::vector<CorpusSample> samples;
};

// Seeded stand-in for a field corpus: genuine contexts spread over dates,
// daylight hours, mid-northern latitudes and camera poses.
SyntheticCorpus build_synthetic_corpus(const CorpusSpec& spec);

struct AttackReport {
  AttackKind kind = AttackKind::TimeOfDay;
  RocCurve roc_dh;
  RocCurve roc_dA;
  RocCurve roc_dp;
  std::vector<double> fpr_per_rep;  // combined rule at the given thresholds
  double mean_fpr = 0.0;
};

struct EvalReport {
  Thresholds thresholds;
  double tpr = 0.0;  // genuine acceptance under the combined rule
  std::vector<AttackReport> attacks;
  double overall_fpr = 0.0;
  RocCurve pooled_dh;
  RocCurve pooled_dA;
  RocCurve pooled_dp;
  RocCurve combined_curve;  // d_h sweep under the fixed d_p gate, all attacks
};

EvalReport run_evaluation(const SyntheticCorpus& corpus, const Thresholds& thresholds = {});

struct DetectabilityCell {
  std::string date;  // ISO date of the baseline
  std::string time;  // "09:00" or "12:00"
  int value = 0;     // minutes (time table) or days (date table)
};

struct DetectabilityTables {
  std::vector<DetectabilityCell> time_shift_minutes;
  std::vector<DetectabilityCell> date_shift_days;
};

// Minimum detectable modifications for the New York City baselines
// (Dec/Mar/Jun 21, 2017 at 09:00 and 12:00 local civil time).
DetectabilityTables nyc_detectability_tables(const Thresholds& th = {});

}  // namespace suncheck
