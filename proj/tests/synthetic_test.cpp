#include "pathassign/synthetic.hpp"

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

namespace pathassign {
namespace {

TEST(Synthetic, NoiseFreeStraightFollowSitsOnHostPath) {
  SyntheticSpec spec;
  spec.noise = NoiseLevels::zero();
  const auto frames = generate_synthetic(spec);
  ASSERT_EQ(frames.size(), 601u);
  for (const auto& f : frames) {
    ASSERT_EQ(f.objects.size(), 1u);
    const auto& o = f.objects[0];
    EXPECT_EQ(o.ground_truth.value(), 2);
    EXPECT_EQ(o.x, 40.0);
    EXPECT_EQ(o.y, 0.0);
    const auto r = transform_to_path(
        InputVector::diagonal(f.host.v, f.host.yaw_rate, o.x, o.y, 0, 0, 0, 0), f.host.alpha);
    EXPECT_NEAR(r.offset.mean, 0.0, 1e-12);
  }
}

TEST(Synthetic, NoiseFreeCurveTransformsBackToConstructedOffset) {
  SyntheticSpec spec;
  spec.kind = ScenarioKind::kHostCurve;
  spec.noise = NoiseLevels::zero();
  spec.duration = 1.0;
  const auto frames = generate_synthetic(spec);
  for (const auto& f : frames) {
    ASSERT_EQ(f.objects.size(), 2u);
    for (const auto& o : f.objects) {
      const double expected = (o.ground_truth.value() - 2) * spec.lane_width;
      const auto r = transform_to_path(
          InputVector::diagonal(f.host.v, f.host.yaw_rate, o.x, o.y, 0, 0, 0, 0), f.host.alpha);
      EXPECT_NEAR(r.offset.mean, expected, 1e-9);
    }
  }
}

TEST(Synthetic, LaneChangeGroundTruthSwitchesAtCrossing) {
  SyntheticSpec spec;
  spec.kind = ScenarioKind::kTargetLaneChange;
  spec.noise = NoiseLevels::zero();
  const auto frames = generate_synthetic(spec);
  for (const auto& f : frames) {
    const int expected = f.timestamp < 10.0 ? 2 : 3;
    EXPECT_EQ(f.objects[0].ground_truth.value(), expected) << f.timestamp;
  }
  EXPECT_EQ(frames[199].objects[0].ground_truth.value(), 2);
  EXPECT_EQ(frames[200].objects[0].ground_truth.value(), 3);
}

TEST(Synthetic, LateralVelocityDuringChange) {
  SyntheticSpec spec;
  spec.kind = ScenarioKind::kTargetLaneChange;
  spec.noise = NoiseLevels::zero();
  const auto frames = generate_synthetic(spec);
  EXPECT_EQ(*frames[0].objects[0].lateral_velocity, 0.0);
  EXPECT_NEAR(*frames[200].objects[0].lateral_velocity, 3.5 / 3.0, 1e-12);
}

TEST(Synthetic, FixedSeedIsReproducible) {
  for (const auto& name : {"straight_follow", "adjacent_lane", "target_lane_change", "host_curve", "noisy_yaw"}) {
    SyntheticSpec spec;
    spec.kind = parse_scenario_kind(name);
    spec.seed = 99;
    std::ostringstream a;
    std::ostringstream b;
    write_scenario(a, generate_synthetic(spec));
    write_scenario(b, generate_synthetic(spec));
    EXPECT_EQ(a.str(), b.str()) << name;
    spec.seed = 100;
    std::ostringstream c;
    write_scenario(c, generate_synthetic(spec));
    EXPECT_NE(a.str(), c.str()) << name;
  }
}

TEST(Synthetic, UnknownKindIsRejected) {
  EXPECT_THROW(parse_scenario_kind("motorway_merge"), InputError);
  for (auto kind : {ScenarioKind::kStraightFollow, ScenarioKind::kNoisyYaw}) {
    EXPECT_EQ(parse_scenario_kind(to_string(kind)), kind);
  }
}

TEST(Synthetic, InvalidSpecIsRejected) {
  SyntheticSpec spec;
  spec.step = 0.0;
  EXPECT_THROW(generate_synthetic(spec), InputError);
  spec = {};
  spec.targets = std::vector<TargetTrack>{{.start_lane = 5}};
  EXPECT_THROW(generate_synthetic(spec), InputError);
}

TEST(GroundTruthIndex, BoundariesBelongToHigherIndex) {
  EXPECT_EQ(ground_truth_index(0.0, 3.5).value(), 2);
  EXPECT_EQ(ground_truth_index(1.75, 3.5).value(), 3);
  EXPECT_EQ(ground_truth_index(1.7499, 3.5).value(), 2);
  EXPECT_EQ(ground_truth_index(-1.75, 3.5).value(), 2);
  EXPECT_EQ(ground_truth_index(-100.0, 3.5).value(), 0);
  EXPECT_EQ(ground_truth_index(100.0, 3.5).value(), 4);
}

TEST(Suites, HaveExpectedShape) {
  EXPECT_EQ(default_suite().size(), 5u);
  const auto noisy = noisy_yaw_suite();
  ASSERT_EQ(noisy.size(), 4u);
  for (const auto& s : noisy) EXPECT_EQ(s.frames.size(), 601u);
  const auto adjacent = adjacent_lane_suite();
  ASSERT_EQ(adjacent.size(), 1u);
  for (const auto& f : adjacent[0].frames) {
    for (const auto& o : f.objects) EXPECT_NE(o.ground_truth.value(), 2);
  }
}

}  // namespace
}  // namespace pathassign
