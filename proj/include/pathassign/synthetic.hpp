#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathassign/scenario.hpp"

namespace pathassign {

enum class ScenarioKind { kStraightFollow, kAdjacentLane, kTargetLaneChange, kHostCurve, kNoisyYaw };

/// Accepts `straight_follow`, `adjacent_lane`, `target_lane_change`,
/// `host_curve`, `noisy_yaw`; throws InputError otherwise.
ScenarioKind parse_scenario_kind(std::string_view name);
std::string_view to_string(ScenarioKind kind);

/// Measurement noise standard deviations applied to the generated signals.
struct NoiseLevels {
  double sigma_x = 0.3;       // m
  double sigma_y = 0.2;       // m
  double sigma_v = 0.1;       // m/s
  double sigma_yaw = 0.002;   // rad/s
  double sigma_v_lat = 0.1;   // m/s

  static NoiseLevels zero() { return {0.0, 0.0, 0.0, 0.0, 0.0}; }
};

/// A target that keeps a constant arc-length range ahead of the host and
/// moves laterally from the center of `start_lane` to the center of
/// `end_lane` with a linear ramp centered on `change_time`.
struct TargetTrack {
  std::int64_t id = 1;
  int start_lane = 2;
  int end_lane = 2;
  double range = 50.0;           // m along the path
  double change_time = 10.0;     // s, instant the ramp passes the midpoint
  double change_duration = 3.0;  // s
};

struct SyntheticSpec {
  ScenarioKind kind = ScenarioKind::kStraightFollow;
  double duration = 30.0;  // s
  double step = 0.05;      // s
  NoiseLevels noise;
  std::uint64_t seed = 1;

  double host_speed = 25.0;    // m/s
  double lane_width = 3.5;     // m
  double curve_radius = 400.0; // m, positive turns left; host_curve only
  double yaw_oscillation_amplitude = 0.03;  // rad/s; noisy_yaw only
  double yaw_oscillation_frequency = 0.5;   // Hz; noisy_yaw only
  bool emit_lateral_velocity = true;

  /// Overrides the kind's default targets when set.
  std::optional<std::vector<TargetTrack>> targets;
};

/// Targets a kind uses when the spec does not override them.
std::vector<TargetTrack> default_targets(const SyntheticSpec& spec);

/// Lateral offset of a target's constructed path position at time t.
double target_lateral_offset(const TargetTrack& target, double lane_width, double t);

/// Path index of a lateral offset for lanes of `lane_width` centered on the
/// host path; an offset exactly on a boundary belongs to the higher index.
PathIndex ground_truth_index(double lateral_offset, double lane_width);

/// Deterministic for a fixed spec (including seed).
Scenario generate_synthetic(const SyntheticSpec& spec);

struct NamedScenario {
  std::string name;
  Scenario frames;
};

/// One scenario of every kind with default noise.
std::vector<NamedScenario> default_suite(std::uint64_t seed = 1, double step = 0.05);

/// Straight road with oscillating yaw-rate disturbance: steady host-lane and
/// adjacent-lane targets plus cut-in and cut-out manoeuvres.
std::vector<NamedScenario> noisy_yaw_suite(std::uint64_t seed = 1, double step = 0.05);

/// Noise-free adjacent-lane targets on both sides.
std::vector<NamedScenario> adjacent_lane_suite(std::uint64_t seed = 1, double step = 0.05);

}  // namespace pathassign
