#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pathassign/continuous_filter.hpp"
#include "pathassign/discrete_filter.hpp"
#include "pathassign/estimator.hpp"
#include "pathassign/likelihood.hpp"
#include "pathassign/scenario.hpp"
#include "pathassign/synthetic.hpp"

namespace pathassign {

enum class Method { kDiscrete, kContinuous };

Method parse_method(std::string_view name);
std::string_view to_string(Method method);

struct PipelineConfig {
  Method method = Method::kContinuous;
  double epsilon = 0.01;          // discrete: neighbor-transition probability
  double eta_gain = 0.05;         // discrete: eta = eta_gain * lateral velocity, s/m
  double sigma_nu = 0.1;          // continuous: process noise, m/s
  double p_min = kDefaultMinAssignProbability;
  BoundaryDefaults boundaries;
  double absence_timeout = 1.0;   // s without a detection before a track's filter is dropped
};

struct FrameResult {
  double timestamp = 0.0;
  std::size_t frame_index = 0;
  std::int64_t object_id = 0;
  Method method = Method::kContinuous;
  Assignment assignment;
  PathPosterior posterior;
  PathIndex ground_truth;
};

/// Transforms each object into path coordinates, steps that object's filter
/// once per frame and extracts the median assignment. Filter state is keyed by
/// object id and discarded after `absence_timeout` without a detection.
std::vector<FrameResult> run_pipeline(std::span<const ScenarioFrame> frames, const PipelineConfig& config);

/// `t,object_id,method,assigned,prob,p0,p1,p2,p3,p4`; `assigned` is -1 when
/// the median index was rejected by the probability threshold.
void write_run_csv(std::ostream& os, std::span<const FrameResult> results);

struct RocCounts {
  std::size_t positives = 0;       // object-frames with ground truth = host path
  std::size_t negatives = 0;       // all other object-frames
  std::size_t true_positives = 0;  // positives accepted as host path
  std::size_t false_positives = 0; // negatives accepted as host path

  RocCounts& operator+=(const RocCounts& other);
};

struct RocPoint {
  std::string parameter_label;
  std::optional<double> tp_rate;  // empty when there are no positives
  std::optional<double> fp_rate;  // empty when there are no negatives
  std::size_t frames_evaluated = 0;
  RocCounts counts;
};

RocCounts count_host_assignments(std::span<const FrameResult> results);
RocPoint roc_from_counts(const RocCounts& counts, std::string label);

/// Host-path TP/FP rates at object-frame granularity. A rejected assignment
/// is a miss for TP and never a false positive.
RocPoint compute_roc(std::span<const FrameResult> results, std::string label = {});

/// One RocPoint per grid value; the value is epsilon for the discrete method
/// and sigma_nu for the continuous one. Scenarios run independently (in
/// parallel when threads != 1) and counts are summed, so the output does not
/// depend on scheduling.
std::vector<RocPoint> sweep_parameters(std::span<const NamedScenario> scenarios, const PipelineConfig& base,
                                       std::span<const double> grid, unsigned threads = 0);

/// `param,tp_rate,fp_rate,frames`; undefined rates are written as `undefined`.
void write_roc_csv(std::ostream& os, std::span<const RocPoint> points);

/// Decades 1e-1 .. 1e-6.
std::vector<double> default_epsilon_grid();
/// 0.04 .. 0.4 m/s in steps of 0.04 (10 values).
std::vector<double> default_sigma_nu_grid();

}  // namespace pathassign
