#include "suncheck/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "suncheck/angles.hpp"
#include "suncheck/rng.hpp"

namespace suncheck {

const char* to_string(AttackKind kind) {
  switch (kind) {
    case AttackKind::TimeOfDay: return "time_of_day";
    case AttackKind::Date: return "date";
    case AttackKind::Latitude: return "latitude";
  }
  return "unknown";
}

ClaimedContext generate_attack(const ClaimedContext& truth, const AttackSpec& spec,
                               int index) {
  truth.validate();
  Rng rng(derive_seed(spec.rng_seed, static_cast<std::uint64_t>(index),
                      static_cast<std::uint64_t>(spec.kind)));
  ClaimedContext fake = truth;
  switch (spec.kind) {
    case AttackKind::TimeOfDay: {
      const int seconds = 8 * 3600 + static_cast<int>(rng.uniform_below(9 * 3600 + 1));
      fake.timestamp.hour = seconds / 3600;
      fake.timestamp.minute = (seconds / 60) % 60;
      fake.timestamp.second = seconds % 60;
      break;
    }
    case AttackKind::Date: {
      const int day = static_cast<int>(rng.uniform_below(days_in_year(truth.timestamp.year)));
      Timestamp jan1 = truth.timestamp;
      jan1.month = 1;
      jan1.day = 1;
      fake.timestamp = jan1.shifted_by_days(day);
      break;
    }
    case AttackKind::Latitude:
      fake.latitude_deg = rng.uniform_real(25.0, 50.0);
      break;
  }
  return fake;
}

ScoreTriple score(const SunEstimate& shadow, const ClaimedContext& claimed) {
  const SunPosition m = sun_position_from_context(claimed);
  ScoreTriple t;
  if (shadow.altitude_deg) t.d_h = altitude_distance(*shadow.altitude_deg, m.altitude_deg);
  if (shadow.azimuth_deg) t.d_A = azimuth_distance(*shadow.azimuth_deg, m.azimuth_deg);
  if (t.d_h && t.d_A) t.d_p = position_distance(*t.d_A, *t.d_h);
  return t;
}

namespace {

// Midpoints between consecutive distinct observed values, with sentinels at
// 0 and infinity, so the step-function ROC is sampled exactly once per step.
std::vector<double> sweep_thresholds(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<double> thresholds;
  thresholds.reserve(values.size() + 2);
  thresholds.push_back(0.0);
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    thresholds.push_back(0.5 * (values[i] + values[i + 1]));
  thresholds.push_back(std::numeric_limits<double>::infinity());
  return thresholds;
}

double fraction_at_most(const std::vector<double>& sorted, double threshold) {
  const auto it = std::upper_bound(sorted.begin(), sorted.end(), threshold);
  return static_cast<double>(it - sorted.begin()) / static_cast<double>(sorted.size());
}

void finish_curve(RocCurve& curve) {
  double auc = 0.0;
  for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
    const RocPoint& a = curve.points[i];
    const RocPoint& b = curve.points[i + 1];
    auc += (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2.0;
  }
  curve.auc = auc;

  double best = std::numeric_limits<double>::infinity();
  for (const RocPoint& p : curve.points) {
    const double d2 = p.fpr * p.fpr + (1.0 - p.tpr) * (1.0 - p.tpr);
    if (d2 < best) {
      best = d2;
      curve.optimal = p;
    }
  }
}

}  // namespace

RocCurve roc_curve_averaged(const std::vector<double>& positives,
                            const std::vector<std::vector<double>>& negative_reps) {
  if (positives.empty() || negative_reps.empty())
    throw Error(ErrorCode::Domain, "ROC needs non-empty positive and negative sets");
  for (const auto& rep : negative_reps)
    if (rep.empty()) throw Error(ErrorCode::Domain, "empty negative repetition");

  std::vector<double> all = positives;
  for (const auto& rep : negative_reps) all.insert(all.end(), rep.begin(), rep.end());
  const std::vector<double> thresholds = sweep_thresholds(std::move(all));

  std::vector<double> pos_sorted = positives;
  std::sort(pos_sorted.begin(), pos_sorted.end());
  std::vector<std::vector<double>> neg_sorted = negative_reps;
  for (auto& rep : neg_sorted) std::sort(rep.begin(), rep.end());

  RocCurve curve;
  curve.points.reserve(thresholds.size());
  for (double t : thresholds) {
    RocPoint p;
    p.threshold = t;
    p.tpr = fraction_at_most(pos_sorted, t);
    double fpr = 0.0;
    for (const auto& rep : neg_sorted) fpr += fraction_at_most(rep, t);
    p.fpr = fpr / static_cast<double>(neg_sorted.size());
    curve.points.push_back(p);
  }
  finish_curve(curve);
  return curve;
}

RocCurve roc_curve(const std::vector<double>& positives,
                   const std::vector<double>& negatives) {
  return roc_curve_averaged(positives, {negatives});
}

RocCurve combined_rule_sweep(const std::vector<HpPair>& positives,
                             const std::vector<std::vector<HpPair>>& negative_reps,
                             double dp_gate) {
  if (positives.empty() || negative_reps.empty())
    throw Error(ErrorCode::Domain, "ROC needs non-empty positive and negative sets");
  for (const auto& rep : negative_reps)
    if (rep.empty()) throw Error(ErrorCode::Domain, "empty negative repetition");

  // Samples failing the d_p gate are rejected at every d_h threshold, so
  // only gate-passing d_h values enter the counts.
  const auto gate_passing = [dp_gate](const std::vector<HpPair>& pairs) {
    std::vector<double> dh;
    dh.reserve(pairs.size());
    for (const HpPair& p : pairs)
      if (p.d_p <= dp_gate) dh.push_back(p.d_h);
    std::sort(dh.begin(), dh.end());
    return dh;
  };

  std::vector<double> all;
  for (const HpPair& p : positives) all.push_back(p.d_h);
  for (const auto& rep : negative_reps)
    for (const HpPair& p : rep) all.push_back(p.d_h);
  const std::vector<double> thresholds = sweep_thresholds(std::move(all));

  const std::vector<double> pos_dh = gate_passing(positives);
  std::vector<std::vector<double>> neg_dh;
  neg_dh.reserve(negative_reps.size());
  for (const auto& rep : negative_reps) neg_dh.push_back(gate_passing(rep));

  const double n_pos = static_cast<double>(positives.size());
  RocCurve curve;
  curve.points.reserve(thresholds.size());
  for (double t : thresholds) {
    RocPoint p;
    p.threshold = t;
    const auto it = std::upper_bound(pos_dh.begin(), pos_dh.end(), t);
    p.tpr = static_cast<double>(it - pos_dh.begin()) / n_pos;
    double fpr = 0.0;
    for (std::size_t r = 0; r < neg_dh.size(); ++r) {
      const auto jt = std::upper_bound(neg_dh[r].begin(), neg_dh[r].end(), t);
      fpr += static_cast<double>(jt - neg_dh[r].begin()) /
             static_cast<double>(negative_reps[r].size());
    }
    p.fpr = fpr / static_cast<double>(neg_dh.size());
    curve.points.push_back(p);
  }
  finish_curve(curve);
  return curve;
}

namespace {

int min_detectable_shift(const ClaimedContext& base, const Thresholds& th, int max_steps,
                         bool date_grid) {
  th.validate();
  const SunPosition truth = sun_position_from_context(base);
  if (!(truth.altitude_deg > 0.0))
    throw Error(ErrorCode::Domain, "sun below the horizon at the base time");
  const SunEstimate est{truth.azimuth_deg, truth.altitude_deg};

  for (int step = 1; step <= max_steps; ++step) {
    for (int sign : {+1, -1}) {
      ClaimedContext shifted = base;
      shifted.timestamp = date_grid ? base.timestamp.shifted_by_days(sign * step)
                                    : base.timestamp.shifted_by_minutes(sign * step);
      if (!validate(est, sun_position_from_context(shifted), th).consistent) return step;
    }
  }
  throw Error(ErrorCode::Domain, "no detectable shift within the search range");
}

}  // namespace

int min_detectable_time_shift_minutes(const ClaimedContext& base, const Thresholds& th,
                                      int max_minutes) {
  return min_detectable_shift(base, th, max_minutes, false);
}

int min_detectable_date_shift_days(const ClaimedContext& base, const Thresholds& th,
                                   int max_days) {
  return min_detectable_shift(base, th, max_days, true);
}

std::vector<NoiseStudyPoint> noise_study(const std::vector<SyntheticFrame>& frames,
                                         const SceneSpec& scene,
                                         const std::vector<double>& sigma_levels,
                                         int trials, std::uint64_t seed) {
  if (frames.empty()) throw Error(ErrorCode::Domain, "noise study needs frames");
  if (trials < 1) throw Error(ErrorCode::Domain, "trial count must be at least 1");

  std::vector<NoiseStudyPoint> out;
  out.reserve(sigma_levels.size());
  for (double sigma : sigma_levels) {
    double alt_sum = 0.0;
    double az_sum = 0.0;
    for (std::size_t i = 0; i < frames.size(); ++i) {
      const NoiseSpec noise{sigma, derive_seed(seed, i), trials};
      for (int t = 0; t < trials; ++t) {
        const ShadowAnnotation noisy = add_noise(frames[i].annotation, noise, t);
        const double alt = infer_altitude(noisy, scene.intrinsics, scene.pose.pitch_deg);
        const double az = infer_azimuth(noisy, scene.intrinsics, scene.pose);
        alt_sum += std::fabs(alt - frames[i].truth_sun.altitude_deg);
        az_sum += circular_distance_deg(az, frames[i].truth_sun.azimuth_deg);
      }
    }
    const double n = static_cast<double>(frames.size()) * trials;
    out.push_back({sigma, alt_sum / n, az_sum / n});
  }
  return out;
}

SyntheticCorpus build_synthetic_corpus(const CorpusSpec& spec) {
  if (spec.genuine_count < 1) throw Error(ErrorCode::Domain, "corpus needs samples");

  SyntheticCorpus corpus;
  corpus.spec = spec;
  corpus.samples.reserve(spec.genuine_count);

  for (int i = 0; i < spec.genuine_count; ++i) {
    Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(i), 0xC0FFEE));
    bool built = false;
    for (int attempt = 0; attempt < 1000 && !built; ++attempt) {
      CorpusSample s;
      s.context.latitude_deg = rng.uniform_real(25.0, 50.0);
      s.context.longitude_deg = rng.uniform_real(-179.0, 180.0);
      const int offset_h =
          static_cast<int>(std::lround(s.context.longitude_deg / 15.0));
      const int day = static_cast<int>(rng.uniform_below(days_in_year(2017)));
      const int seconds = 9 * 3600 + static_cast<int>(rng.uniform_below(7 * 3600 + 1));
      s.context.timestamp = Timestamp{2017,          1,
                                      1,             seconds / 3600,
                                      (seconds / 60) % 60, seconds % 60,
                                      offset_h * 60}
                                .shifted_by_days(day);

      s.truth_sun = sun_position_from_context(s.context);
      if (s.truth_sun.altitude_deg < spec.min_altitude_deg) continue;

      s.scene = dataset1_scene(spec.object_distance_m, rng.uniform_real(-20.0, 20.0));
      s.scene.pose.yaw_deg = rng.uniform_real(0.0, 360.0);
      try {
        const ShadowAnnotation clean = synthesize_scene(s.scene, s.truth_sun);
        const NoiseSpec noise{spec.noise_sigma_px,
                              derive_seed(spec.seed, static_cast<std::uint64_t>(i), 0xA0),
                              1};
        s.annotation = add_noise(clean, noise, 0);
        s.shadow = infer_sun_position(s.annotation, s.scene.intrinsics, s.scene.pose);
      } catch (const Error&) {
        continue;
      }
      corpus.samples.push_back(std::move(s));
      built = true;
    }
    if (!built)
      throw Error(ErrorCode::Domain, "could not build a feasible corpus sample");
  }
  return corpus;
}

namespace {

bool accepted(const ScoreTriple& t, const Thresholds& th) {
  return t.d_h && t.d_p && *t.d_h <= th.altitude_threshold_deg &&
         *t.d_p <= th.position_threshold_deg;
}

}  // namespace

EvalReport run_evaluation(const SyntheticCorpus& corpus, const Thresholds& thresholds) {
  thresholds.validate();
  if (corpus.samples.empty()) throw Error(ErrorCode::Domain, "empty corpus");

  EvalReport report;
  report.thresholds = thresholds;

  std::vector<ScoreTriple> genuine;
  genuine.reserve(corpus.samples.size());
  for (const CorpusSample& s : corpus.samples) genuine.push_back(score(s.shadow, s.context));

  int tp = 0;
  for (const ScoreTriple& t : genuine) tp += accepted(t, thresholds) ? 1 : 0;
  report.tpr = static_cast<double>(tp) / static_cast<double>(genuine.size());

  std::vector<double> pos_dh, pos_dA, pos_dp;
  std::vector<HpPair> pos_pairs;
  for (const ScoreTriple& t : genuine) {
    pos_dh.push_back(*t.d_h);
    pos_dA.push_back(*t.d_A);
    pos_dp.push_back(*t.d_p);
    pos_pairs.push_back({*t.d_h, *t.d_p});
  }

  const AttackKind kinds[] = {AttackKind::TimeOfDay, AttackKind::Date, AttackKind::Latitude};
  const int reps = std::max(1, corpus.spec.repetitions);

  // Pooled-by-repetition negative sets across all attack kinds.
  std::vector<std::vector<double>> pooled_dh(reps), pooled_dA(reps), pooled_dp(reps);
  std::vector<std::vector<HpPair>> pooled_pairs(reps);

  double fpr_total = 0.0;
  for (AttackKind kind : kinds) {
    AttackReport ar;
    ar.kind = kind;
    std::vector<std::vector<double>> neg_dh(reps), neg_dA(reps), neg_dp(reps);
    for (int r = 0; r < reps; ++r) {
      AttackSpec aspec;
      aspec.kind = kind;
      aspec.rng_seed = derive_seed(corpus.spec.seed, 0xBAD0 + static_cast<int>(kind), r);
      aspec.count = static_cast<int>(corpus.samples.size());
      aspec.repetitions = reps;

      int fp = 0;
      for (std::size_t i = 0; i < corpus.samples.size(); ++i) {
        const ClaimedContext fake =
            generate_attack(corpus.samples[i].context, aspec, static_cast<int>(i));
        const ScoreTriple t = score(corpus.samples[i].shadow, fake);
        neg_dh[r].push_back(*t.d_h);
        neg_dA[r].push_back(*t.d_A);
        neg_dp[r].push_back(*t.d_p);
        pooled_dh[r].push_back(*t.d_h);
        pooled_dA[r].push_back(*t.d_A);
        pooled_dp[r].push_back(*t.d_p);
        pooled_pairs[r].push_back({*t.d_h, *t.d_p});
        fp += accepted(t, thresholds) ? 1 : 0;
      }
      ar.fpr_per_rep.push_back(static_cast<double>(fp) /
                               static_cast<double>(corpus.samples.size()));
    }
    double mean = 0.0;
    for (double f : ar.fpr_per_rep) mean += f;
    ar.mean_fpr = mean / static_cast<double>(ar.fpr_per_rep.size());
    fpr_total += ar.mean_fpr;

    ar.roc_dh = roc_curve_averaged(pos_dh, neg_dh);
    ar.roc_dA = roc_curve_averaged(pos_dA, neg_dA);
    ar.roc_dp = roc_curve_averaged(pos_dp, neg_dp);
    report.attacks.push_back(std::move(ar));
  }
  report.overall_fpr = fpr_total / 3.0;

  report.pooled_dh = roc_curve_averaged(pos_dh, pooled_dh);
  report.pooled_dA = roc_curve_averaged(pos_dA, pooled_dA);
  report.pooled_dp = roc_curve_averaged(pos_dp, pooled_dp);
  report.combined_curve =
      combined_rule_sweep(pos_pairs, pooled_pairs, thresholds.position_threshold_deg);
  return report;
}

DetectabilityTables nyc_detectability_tables(const Thresholds& th) {
  // Civil UTC offsets for New York in 2017: DST on Mar 21 and Jun 21.
  struct Baseline {
    int month, day, offset_minutes;
  };
  const Baseline dates[] = {{12, 21, -5 * 60}, {3, 21, -4 * 60}, {6, 21, -4 * 60}};
  const int hours[] = {9, 12};

  DetectabilityTables tables;
  for (const Baseline& b : dates) {
    for (int hour : hours) {
      ClaimedContext ctx;
      ctx.latitude_deg = 40.71;
      ctx.longitude_deg = -74.0;
      ctx.timestamp = Timestamp{2017, b.month, b.day, hour, 0, 0, b.offset_minutes};
      char date_buf[16], time_buf[8];
      std::snprintf(date_buf, sizeof(date_buf), "2017-%02d-%02d", b.month, b.day);
      std::snprintf(time_buf, sizeof(time_buf), "%02d:00", hour);
      tables.time_shift_minutes.push_back(
          {date_buf, time_buf, min_detectable_time_shift_minutes(ctx, th)});
      tables.date_shift_days.push_back(
          {date_buf, time_buf, min_detectable_date_shift_days(ctx, th)});
    }
  }
  return tables;
}

}  // namespace suncheck
