#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pathassign/geometry.hpp"
#include "pathassign/types.hpp"

namespace pathassign {

/// Malformed scenario record. `line` is 1-based; `field` names the offending
/// key when one can be identified.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& what);
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// Well-formed records that are inconsistent as a sequence.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ObjectRecord {
  std::int64_t id = 0;
  double x = 0.0;
  double y = 0.0;
  double var_x = 0.0;
  double var_y = 0.0;
  std::optional<double> lateral_velocity;  // m/s, path frame
  PathIndex ground_truth;

  friend bool operator==(const ObjectRecord&, const ObjectRecord&) = default;
};

struct HostRecord {
  double v = 0.0;
  double yaw_rate = 0.0;
  double var_v = 0.0;
  double var_yaw = 0.0;
  double alpha = 0.0;

  HostState state(double timestamp) const { return {v, yaw_rate, alpha, timestamp}; }

  friend bool operator==(const HostRecord&, const HostRecord&) = default;
};

struct ScenarioFrame {
  double timestamp = 0.0;
  HostRecord host;
  std::vector<ObjectRecord> objects;
  std::optional<std::array<GaussianScalar, 4>> bounds;  // pre-transformed path cues

  friend bool operator==(const ScenarioFrame&, const ScenarioFrame&) = default;
};

using Scenario = std::vector<ScenarioFrame>;

/// Reads JSON-lines records:
///   {"t": s, "host": {"v", "yaw_rate", "var_v", "var_yaw", ["alpha"]},
///    "objects": [{"id", "x", "y", "var_x", "var_y", ["v_lat"], "gt"}],
///    ["bounds": [{"mu", "sigma"} x 4]]}
/// Blank lines are skipped. Unknown keys are rejected. Throws ParseError for
/// schema violations and ValidationError for non-increasing timestamps.
Scenario parse_scenario(std::istream& in);
Scenario parse_scenario_string(const std::string& text);
Scenario load_scenario_file(const std::string& path);

/// Inverse of parse_scenario; numbers are written with round-trip precision.
void write_scenario(std::ostream& os, const Scenario& frames);
void save_scenario_file(const std::string& path, const Scenario& frames);

}  // namespace pathassign
