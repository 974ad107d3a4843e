#include "pathassign/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace pathassign {
namespace {

struct PathPoint {
  double x;
  double y;
};

// Host-frame position of a point at arc length s and left offset d along a
// path of constant curvature tangent to the host's longitudinal axis.
PathPoint point_on_path(double curvature, double s, double d) {
  if (curvature == 0.0) return {s, d};
  const double theta = curvature * s;
  return {std::sin(theta) / curvature - d * std::sin(theta),
          (1.0 - std::cos(theta)) / curvature + d * std::cos(theta)};
}

double lane_center(int lane, double lane_width) { return (lane - PathIndex::kHost) * lane_width; }

double target_lateral_velocity(const TargetTrack& target, double lane_width, double t) {
  if (target.start_lane == target.end_lane || target.change_duration <= 0.0) return 0.0;
  const double begin = target.change_time - 0.5 * target.change_duration;
  if (t < begin || t > begin + target.change_duration) return 0.0;
  return (target.end_lane - target.start_lane) * lane_width / target.change_duration;
}

}  // namespace

ScenarioKind parse_scenario_kind(std::string_view name) {
  if (name == "straight_follow") return ScenarioKind::kStraightFollow;
  if (name == "adjacent_lane") return ScenarioKind::kAdjacentLane;
  if (name == "target_lane_change") return ScenarioKind::kTargetLaneChange;
  if (name == "host_curve") return ScenarioKind::kHostCurve;
  if (name == "noisy_yaw") return ScenarioKind::kNoisyYaw;
  throw InputError("unknown scenario kind: " + std::string(name));
}

std::string_view to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kStraightFollow: return "straight_follow";
    case ScenarioKind::kAdjacentLane: return "adjacent_lane";
    case ScenarioKind::kTargetLaneChange: return "target_lane_change";
    case ScenarioKind::kHostCurve: return "host_curve";
    case ScenarioKind::kNoisyYaw: return "noisy_yaw";
  }
  return "unknown";
}

std::vector<TargetTrack> default_targets(const SyntheticSpec& spec) {
  switch (spec.kind) {
    case ScenarioKind::kStraightFollow:
      return {{.id = 1, .start_lane = 2, .end_lane = 2, .range = 40.0}};
    case ScenarioKind::kAdjacentLane:
      return {{.id = 1, .start_lane = 3, .end_lane = 3, .range = 40.0}};
    case ScenarioKind::kTargetLaneChange:
      return {{.id = 1, .start_lane = 2, .end_lane = 3, .range = 40.0, .change_time = 10.0}};
    case ScenarioKind::kHostCurve:
      return {{.id = 1, .start_lane = 2, .end_lane = 2, .range = 50.0},
              {.id = 2, .start_lane = 1, .end_lane = 1, .range = 70.0}};
    case ScenarioKind::kNoisyYaw:
      return {{.id = 1, .start_lane = 2, .end_lane = 2, .range = 60.0},
              {.id = 2, .start_lane = 3, .end_lane = 3, .range = 60.0}};
  }
  return {};
}

double target_lateral_offset(const TargetTrack& target, double lane_width, double t) {
  const double from = lane_center(target.start_lane, lane_width);
  const double to = lane_center(target.end_lane, lane_width);
  if (target.start_lane == target.end_lane) return from;
  if (target.change_duration <= 0.0) return t < target.change_time ? from : to;
  const double begin = target.change_time - 0.5 * target.change_duration;
  const double fraction = std::clamp((t - begin) / target.change_duration, 0.0, 1.0);
  return from + (to - from) * fraction;
}

PathIndex ground_truth_index(double lateral_offset, double lane_width) {
  int index = 0;
  for (int b = 0; b < 4; ++b) {
    const double boundary = (b - 1.5) * lane_width;
    if (lateral_offset >= boundary) index = b + 1;
  }
  return PathIndex(index);
}

Scenario generate_synthetic(const SyntheticSpec& spec) {
  if (!(spec.step > 0.0)) throw InputError("generate_synthetic: step must be positive");
  if (!(spec.duration >= 0.0)) throw InputError("generate_synthetic: negative duration");
  if (!(spec.host_speed > 0.0) || !(spec.lane_width > 0.0)) {
    throw InputError("generate_synthetic: host speed and lane width must be positive");
  }
  const auto targets = spec.targets ? *spec.targets : default_targets(spec);
  for (const auto& t : targets) {
    if (t.start_lane < 0 || t.start_lane > 4 || t.end_lane < 0 || t.end_lane > 4) {
      throw InputError("generate_synthetic: target lanes must be in 0..4");
    }
    if (!(t.range > 0.0)) throw InputError("generate_synthetic: target range must be positive");
  }

  const double curvature =
      spec.kind == ScenarioKind::kHostCurve && spec.curve_radius != 0.0 ? 1.0 / spec.curve_radius : 0.0;
  const NoiseLevels& n = spec.noise;

  std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                    static_cast<std::uint32_t>(spec.kind)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> unit(0.0, 1.0);
  auto noisy = [&](double value, double sigma) { return sigma > 0.0 ? value + sigma * unit(rng) : value; };

  const auto frames = static_cast<std::size_t>(std::floor(spec.duration / spec.step + 1e-9)) + 1;
  Scenario out;
  out.reserve(frames);
  for (std::size_t k = 0; k < frames; ++k) {
    const double t = static_cast<double>(k) * spec.step;
    ScenarioFrame f;
    f.timestamp = t;

    double yaw = spec.host_speed * curvature;
    if (spec.kind == ScenarioKind::kNoisyYaw) {
      yaw += spec.yaw_oscillation_amplitude *
             std::sin(2.0 * std::numbers::pi * spec.yaw_oscillation_frequency * t);
    }
    f.host.v = std::max(0.0, noisy(spec.host_speed, n.sigma_v));
    f.host.yaw_rate = noisy(yaw, n.sigma_yaw);
    f.host.var_v = n.sigma_v * n.sigma_v;
    f.host.var_yaw = n.sigma_yaw * n.sigma_yaw;

    for (const auto& target : targets) {
      const double d = target_lateral_offset(target, spec.lane_width, t);
      const PathPoint p = point_on_path(curvature, target.range, d);
      ObjectRecord o;
      o.id = target.id;
      o.x = noisy(p.x, n.sigma_x);
      o.y = noisy(p.y, n.sigma_y);
      o.var_x = n.sigma_x * n.sigma_x;
      o.var_y = n.sigma_y * n.sigma_y;
      if (spec.emit_lateral_velocity) {
        o.lateral_velocity = noisy(target_lateral_velocity(target, spec.lane_width, t), n.sigma_v_lat);
      }
      o.ground_truth = ground_truth_index(d, spec.lane_width);
      f.objects.push_back(o);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<NamedScenario> default_suite(std::uint64_t seed, double step) {
  std::vector<NamedScenario> suite;
  for (auto kind : {ScenarioKind::kStraightFollow, ScenarioKind::kAdjacentLane,
                    ScenarioKind::kTargetLaneChange, ScenarioKind::kHostCurve, ScenarioKind::kNoisyYaw}) {
    SyntheticSpec spec;
    spec.kind = kind;
    spec.seed = seed;
    spec.step = step;
    suite.push_back({std::string(to_string(kind)), generate_synthetic(spec)});
  }
  return suite;
}

std::vector<NamedScenario> noisy_yaw_suite(std::uint64_t seed, double step) {
  struct Variant {
    const char* name;
    std::vector<TargetTrack> targets;
  };
  const std::vector<Variant> variants = {
      {"noisy_yaw_follow", {{.id = 1, .start_lane = 2, .end_lane = 2, .range = 60.0}}},
      {"noisy_yaw_adjacent",
       {{.id = 1, .start_lane = 3, .end_lane = 3, .range = 60.0},
        {.id = 2, .start_lane = 1, .end_lane = 1, .range = 45.0}}},
      {"noisy_yaw_cut_in", {{.id = 1, .start_lane = 3, .end_lane = 2, .range = 50.0, .change_time = 12.0}}},
      {"noisy_yaw_cut_out", {{.id = 1, .start_lane = 2, .end_lane = 1, .range = 50.0, .change_time = 18.0}}},
  };
  std::vector<NamedScenario> suite;
  for (std::size_t i = 0; i < variants.size(); ++i) {
    SyntheticSpec spec;
    spec.kind = ScenarioKind::kNoisyYaw;
    spec.seed = seed + i;
    spec.step = step;
    spec.targets = variants[i].targets;
    suite.push_back({variants[i].name, generate_synthetic(spec)});
  }
  return suite;
}

std::vector<NamedScenario> adjacent_lane_suite(std::uint64_t seed, double step) {
  SyntheticSpec spec;
  spec.kind = ScenarioKind::kAdjacentLane;
  spec.seed = seed;
  spec.step = step;
  spec.noise = NoiseLevels::zero();
  spec.targets = std::vector<TargetTrack>{{.id = 1, .start_lane = 3, .end_lane = 3, .range = 40.0},
                                          {.id = 2, .start_lane = 1, .end_lane = 1, .range = 60.0}};
  return {{"adjacent_lane_zero_noise", generate_synthetic(spec)}};
}

}  // namespace pathassign
