#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "pathassign/types.hpp"

namespace pathassign {

/// Standard Hellinger distance sqrt(1 - sum sqrt(p_i q_i)) between two
/// distributions over the same bins. Result is in [0, 1].
double hellinger_distance(std::span<const double> p, std::span<const double> q);

/// Probability mass of g in each bin delimited by `edges` (edges.size() - 1
/// bins), renormalized to the covered range. A zero-std Gaussian puts all of
/// its mass into the bin containing its mean.
std::vector<double> gaussian_bin_masses(std::span<const double> edges, const GaussianScalar& g);

/// Normalized histogram of samples over `edges`; values on the last edge fall
/// into the last bin, values outside the range are dropped before normalizing.
std::vector<double> normalized_histogram(std::span<const double> edges,
                                         std::span<const double> samples);

struct McGridPoint {
  double x = 0.0;
  double y = 0.0;
  double v = 0.0;
  double yaw_rate = 0.0;
  double var_x = 0.0;
  double var_y = 0.0;
  double var_v = 0.0;
  double var_yaw = 0.0;
};

/// Cartesian grid over object range, bearing, speed and yaw rate. The lateral
/// position of each point is x * tan(bearing). Expansion order is x, bearing,
/// v, yaw_rate with yaw_rate varying fastest.
struct McGridSpec {
  std::vector<double> x;
  std::vector<double> bearing_deg;
  std::vector<double> v;
  std::vector<double> yaw_rate;
  double var_x = 0.25;
  double var_y = 0.25;
  double var_v = 0.01;
  double var_yaw = 1e-5;

  /// `levels` evenly spaced values per axis spanning x in [1, 110] m,
  /// bearing in [-21, 21] deg, v in [1, 70] m/s and yaw rate in [-0.7, 0.7] rad/s.
  static McGridSpec uniform(std::size_t x_levels, std::size_t bearing_levels,
                            std::size_t v_levels, std::size_t yaw_levels);

  /// Throws InputError for empty axes or values outside the ranges above.
  std::vector<McGridPoint> expand() const;
};

struct McOptions {
  std::size_t samples_per_point = 5000;
  std::size_t bins = 100;
  double span_std = 6.0;  // histogram covers sample mean +- span_std * sample std
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
};

enum class McStatus { kOk, kSkipped };

struct McResult {
  McGridPoint point;
  double hellinger = 0.0;  // NaN when skipped
  McStatus status = McStatus::kOk;
};

/// Hellinger distance between one sampled pushforward and its Taylor Gaussian.
/// Sampling uses its own stream derived from (seed, index).
McResult mc_validate_point(const McGridPoint& point, std::size_t index, const McOptions& options);

/// Evaluates every grid point; output order matches input order regardless of
/// the number of worker threads.
std::vector<McResult> mc_validate(std::span<const McGridPoint> grid, const McOptions& options);

/// Header `x,y,v,yaw_rate,var_x,var_y,var_v,var_yaw,hellinger,status` plus one row per result.
void write_mc_csv(std::ostream& os, std::span<const McResult> results);

}  // namespace pathassign
