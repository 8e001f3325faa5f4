#include <doctest.h>

#include <cmath>

#include "suncheck/angles.hpp"
#include "suncheck/evaluate.hpp"
#include "suncheck/rng.hpp"

using namespace suncheck;

namespace {

ClaimedContext nyc_june_noon() {
  ClaimedContext ctx;
  ctx.latitude_deg = 40.71;
  ctx.longitude_deg = -74.0;
  ctx.timestamp = Timestamp{2017, 6, 21, 12, 0, 0, -4 * 60};
  return ctx;
}

bool non_decreasing(const RocCurve& curve) {
  for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
    if (curve.points[i + 1].tpr < curve.points[i].tpr - 1e-12) return false;
    if (curve.points[i + 1].fpr < curve.points[i].fpr - 1e-12) return false;
    if (curve.points[i + 1].threshold < curve.points[i].threshold) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("attacks falsify exactly one field") {
  const ClaimedContext truth = nyc_june_noon();

  AttackSpec spec;
  spec.rng_seed = 42;

  spec.kind = AttackKind::TimeOfDay;
  for (int i = 0; i < 50; ++i) {
    const ClaimedContext fake = generate_attack(truth, spec, i);
    const double h = fake.timestamp.local_hours();
    CHECK(h >= 8.0);
    CHECK(h <= 17.0);
    CHECK(fake.timestamp.month == truth.timestamp.month);
    CHECK(fake.timestamp.day == truth.timestamp.day);
    CHECK(fake.latitude_deg == truth.latitude_deg);
    CHECK(fake.longitude_deg == truth.longitude_deg);
  }

  spec.kind = AttackKind::Date;
  for (int i = 0; i < 50; ++i) {
    const ClaimedContext fake = generate_attack(truth, spec, i);
    CHECK(fake.timestamp.year == truth.timestamp.year);
    CHECK(fake.timestamp.hour == truth.timestamp.hour);
    CHECK(fake.timestamp.minute == truth.timestamp.minute);
    CHECK(fake.latitude_deg == truth.latitude_deg);
  }

  spec.kind = AttackKind::Latitude;
  for (int i = 0; i < 50; ++i) {
    const ClaimedContext fake = generate_attack(truth, spec, i);
    CHECK(fake.latitude_deg >= 25.0);
    CHECK(fake.latitude_deg < 50.0);
    CHECK(fake.timestamp.to_iso8601() == truth.timestamp.to_iso8601());
    CHECK(fake.longitude_deg == truth.longitude_deg);
  }
}

TEST_CASE("attack generation is deterministic per seed and index") {
  const ClaimedContext truth = nyc_june_noon();
  AttackSpec spec;
  spec.kind = AttackKind::TimeOfDay;
  spec.rng_seed = 7;
  const ClaimedContext a = generate_attack(truth, spec, 13);
  const ClaimedContext b = generate_attack(truth, spec, 13);
  CHECK(a.timestamp.to_iso8601() == b.timestamp.to_iso8601());
  const ClaimedContext c = generate_attack(truth, spec, 14);
  // Different index almost surely draws a different second of the day.
  CHECK(a.timestamp.to_iso8601() != c.timestamp.to_iso8601());
}

TEST_CASE("score of a genuine sample is near zero") {
  const ClaimedContext ctx = nyc_june_noon();
  const SunPosition truth = sun_position_from_context(ctx);
  SunEstimate est;
  est.azimuth_deg = truth.azimuth_deg;
  est.altitude_deg = truth.altitude_deg;
  const ScoreTriple t = score(est, ctx);
  CHECK(*t.d_h < 1e-9);
  CHECK(*t.d_A < 1e-9);
  CHECK(*t.d_p < 1e-9);
}

TEST_CASE("a three-hour shift at a June noon is far outside the thresholds") {
  const ClaimedContext ctx = nyc_june_noon();
  const SunPosition truth = sun_position_from_context(ctx);
  SunEstimate est;
  est.azimuth_deg = truth.azimuth_deg;
  est.altitude_deg = truth.altitude_deg;
  ClaimedContext shifted = ctx;
  shifted.timestamp = ctx.timestamp.shifted_by_minutes(180);
  const ScoreTriple t = score(est, shifted);
  CHECK(*t.d_p > 30.0);
}

TEST_CASE("altitude-only samples score without azimuth distances") {
  SunEstimate est;
  est.altitude_deg = 50.0;
  const ScoreTriple t = score(est, nyc_june_noon());
  CHECK(t.d_h.has_value());
  CHECK_FALSE(t.d_A.has_value());
  CHECK_FALSE(t.d_p.has_value());
}

TEST_CASE("roc on perfectly separated sets") {
  std::vector<double> pos, neg;
  for (int i = 0; i < 40; ++i) pos.push_back(0.1 + 0.02 * i);
  for (int i = 0; i < 60; ++i) neg.push_back(10.0 + 0.05 * i);
  const RocCurve curve = roc_curve(pos, neg);
  CHECK(curve.auc == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(curve.optimal.fpr == 0.0);
  CHECK(curve.optimal.tpr == 1.0);
  CHECK(non_decreasing(curve));
  CHECK(curve.points.front().threshold == 0.0);
  CHECK(std::isinf(curve.points.back().threshold));
  CHECK(curve.points.back().tpr == 1.0);
  CHECK(curve.points.back().fpr == 1.0);
}

TEST_CASE("roc of identical distributions is the no-skill diagonal") {
  std::vector<double> values;
  for (int i = 1; i <= 33; ++i) values.push_back(0.3 * i);
  const RocCurve curve = roc_curve(values, values);
  CHECK(curve.auc == doctest::Approx(0.5).epsilon(1e-12));
  for (const RocPoint& p : curve.points) CHECK(p.tpr == doctest::Approx(p.fpr).epsilon(1e-12));
  CHECK(curve.points.front().tpr == 0.0);  // zero threshold accepts nothing
}

TEST_CASE("roc threshold between separated blocks classifies perfectly") {
  const std::vector<double> pos(25, 0.0);
  const std::vector<double> neg(25, 10.0);
  const RocCurve curve = roc_curve(pos, neg);
  bool found = false;
  for (const RocPoint& p : curve.points)
    if (p.threshold == doctest::Approx(5.0)) {
      CHECK(p.tpr == 1.0);
      CHECK(p.fpr == 0.0);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("roc curves are monotone on random data") {
  Rng rng(5);
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<double> pos, neg;
    for (int i = 0; i < 80; ++i) pos.push_back(rng.uniform_real(0.0, 6.0));
    for (int i = 0; i < 80; ++i) neg.push_back(rng.uniform_real(2.0, 25.0));
    const RocCurve curve = roc_curve(pos, neg);
    CHECK(non_decreasing(curve));
    CHECK(curve.auc >= 0.0);
    CHECK(curve.auc <= 1.0);

    // The reported optimum must match an exhaustive scan.
    double best = 1e300;
    for (const RocPoint& p : curve.points)
      best = std::min(best, p.fpr * p.fpr + (1.0 - p.tpr) * (1.0 - p.tpr));
    const double got = curve.optimal.fpr * curve.optimal.fpr +
                       (1.0 - curve.optimal.tpr) * (1.0 - curve.optimal.tpr);
    CHECK(got == doctest::Approx(best).epsilon(1e-15));
  }
}

TEST_CASE("roc rejects empty inputs") {
  CHECK_THROWS_AS(roc_curve({}, {1.0}), Error);
  CHECK_THROWS_AS(roc_curve({1.0}, {}), Error);
}

TEST_CASE("averaged roc interleaves repetition FPRs") {
  const std::vector<double> pos = {1.0, 2.0};
  const std::vector<std::vector<double>> reps = {{0.5, 10.0}, {10.0, 10.0}};
  const RocCurve curve = roc_curve_averaged(pos, reps);
  // At a threshold of ~3, rep 1 accepts one of two, rep 2 accepts none.
  for (const RocPoint& p : curve.points)
    if (p.threshold > 2.0 && p.threshold < 10.0) CHECK(p.fpr == doctest::Approx(0.25));
}

TEST_CASE("combined sweep with an infinite gate reduces to the plain curve") {
  Rng rng(17);
  std::vector<HpPair> pos, neg;
  std::vector<double> pos_dh, neg_dh;
  for (int i = 0; i < 60; ++i) {
    const HpPair p{rng.uniform_real(0.0, 4.0), rng.uniform_real(0.0, 6.0)};
    const HpPair n{rng.uniform_real(1.0, 30.0), rng.uniform_real(1.0, 40.0)};
    pos.push_back(p);
    neg.push_back(n);
    pos_dh.push_back(p.d_h);
    neg_dh.push_back(n.d_h);
  }
  const RocCurve gated =
      combined_rule_sweep(pos, {neg}, std::numeric_limits<double>::infinity());
  const RocCurve plain = roc_curve(pos_dh, neg_dh);
  REQUIRE(gated.points.size() == plain.points.size());
  for (std::size_t i = 0; i < gated.points.size(); ++i) {
    CHECK(gated.points[i].tpr == doctest::Approx(plain.points[i].tpr).epsilon(1e-12));
    CHECK(gated.points[i].fpr == doctest::Approx(plain.points[i].fpr).epsilon(1e-12));
  }
}

TEST_CASE("the position gate caps the attainable TPR") {
  std::vector<HpPair> pos;
  for (int i = 0; i < 100; ++i) pos.push_back({0.1 * i / 100.0, i < 94 ? 1.0 : 100.0});
  std::vector<HpPair> neg;
  for (int i = 0; i < 100; ++i) neg.push_back({20.0, 20.0});
  const RocCurve curve = combined_rule_sweep(pos, {neg}, 9.4);
  CHECK(curve.points.back().tpr == doctest::Approx(0.94).epsilon(1e-12));
  CHECK(non_decreasing(curve));
}

TEST_CASE("minimum detectable time shift at the June solstice noon") {
  const int dt = min_detectable_time_shift_minutes(nyc_june_noon(), Thresholds{});
  CHECK(dt >= 11);
  CHECK(dt <= 21);  // table entry 16 +/- 5

  Thresholds tiny;
  tiny.altitude_threshold_deg = 1e-6;
  tiny.position_threshold_deg = 1e-6;
  CHECK(min_detectable_time_shift_minutes(nyc_june_noon(), tiny) == 1);
}

TEST_CASE("minimum detectable shifts grow with looser thresholds") {
  const ClaimedContext ctx = nyc_june_noon();
  Thresholds half;
  half.altitude_threshold_deg = 2.5;
  half.position_threshold_deg = 4.7;
  CHECK(min_detectable_time_shift_minutes(ctx, half) <=
        min_detectable_time_shift_minutes(ctx, Thresholds{}));
  CHECK(min_detectable_date_shift_days(ctx, half) <=
        min_detectable_date_shift_days(ctx, Thresholds{}));
}

TEST_CASE("shift search fails below the horizon") {
  ClaimedContext night = nyc_june_noon();
  night.timestamp.hour = 1;
  CHECK_THROWS_AS(min_detectable_time_shift_minutes(night, Thresholds{}), Error);
}

TEST_CASE("noise study errors grow with the noise level") {
  const std::vector<SyntheticFrame> frames = make_dataset1(10.0, 0.0);
  const SceneSpec scene = dataset1_scene(10.0, 0.0);
  const auto points = noise_study(frames, scene, {0.0, 1.0, 4.0}, 25, 97);
  REQUIRE(points.size() == 3);
  CHECK(points[0].mean_abs_altitude_error_deg < 1e-9);
  CHECK(points[0].mean_abs_azimuth_error_deg < 1e-9);
  CHECK(points[1].mean_abs_altitude_error_deg > 0.01);
  CHECK(points[2].mean_abs_altitude_error_deg > points[1].mean_abs_altitude_error_deg);
  CHECK(points[2].mean_abs_azimuth_error_deg > points[1].mean_abs_azimuth_error_deg);
}

TEST_CASE("corpus construction is deterministic") {
  CorpusSpec spec;
  spec.seed = 2024;
  spec.genuine_count = 12;
  const SyntheticCorpus a = build_synthetic_corpus(spec);
  const SyntheticCorpus b = build_synthetic_corpus(spec);
  REQUIRE(a.samples.size() == 12);
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].context.timestamp.to_iso8601() ==
          b.samples[i].context.timestamp.to_iso8601());
    CHECK(a.samples[i].annotation.shadow_tip.x == b.samples[i].annotation.shadow_tip.x);
    CHECK(*a.samples[i].shadow.azimuth_deg == *b.samples[i].shadow.azimuth_deg);
    CHECK(a.samples[i].truth_sun.altitude_deg >= spec.min_altitude_deg);
  }
}

TEST_CASE("evaluation report structure on a small corpus") {
  CorpusSpec spec;
  spec.seed = 77;
  spec.genuine_count = 40;
  spec.repetitions = 2;
  const SyntheticCorpus corpus = build_synthetic_corpus(spec);
  const EvalReport report = run_evaluation(corpus);

  REQUIRE(report.attacks.size() == 3);
  for (const AttackReport& ar : report.attacks) {
    CHECK(ar.fpr_per_rep.size() == 2);
    CHECK(non_decreasing(ar.roc_dh));
    CHECK(non_decreasing(ar.roc_dA));
    CHECK(non_decreasing(ar.roc_dp));
    CHECK(ar.roc_dp.auc >= 0.0);
    CHECK(ar.roc_dp.auc <= 1.0);
  }
  CHECK(report.tpr >= 0.0);
  CHECK(report.tpr <= 1.0);
  CHECK(non_decreasing(report.combined_curve));
  // The combined curve cannot beat the d_p gate's acceptance ceiling.
  double max_tpr = report.combined_curve.points.back().tpr;
  CHECK(max_tpr <= 1.0 + 1e-12);
}

TEST_CASE("detectability tables carry one cell per baseline") {
  // Exercised with loose thresholds to keep the scan short.
  Thresholds th;
  th.altitude_threshold_deg = 2.0;
  th.position_threshold_deg = 4.0;
  const DetectabilityTables tables = nyc_detectability_tables(th);
  CHECK(tables.time_shift_minutes.size() == 6);
  CHECK(tables.date_shift_days.size() == 6);
  for (const DetectabilityCell& c : tables.time_shift_minutes) CHECK(c.value >= 1);
  for (const DetectabilityCell& c : tables.date_shift_days) CHECK(c.value >= 1);
}
