#pragma once

#include <array>
#include <optional>
#include <utility>

#include "pathassign/types.hpp"

namespace pathassign {

/// Phi(t) for the standard normal distribution; accepts +-infinity, throws
/// InputError on NaN.
double std_normal_cdf(double t);

enum class BoundarySource { kMeasured, kExtrapolated, kDefault };

/// Four boundaries b1..b4 in path coordinates with strictly increasing means.
/// Path index l lies between b_l and b_{l+1}, with b_0 = -inf and b_5 = +inf.
class BoundarySet {
 public:
  BoundarySet(const std::array<GaussianScalar, 4>& boundaries, BoundarySource source);

  const std::array<GaussianScalar, 4>& boundaries() const { return boundaries_; }
  const GaussianScalar& operator[](std::size_t i) const { return boundaries_[i]; }
  BoundarySource source() const { return source_; }

  /// Same boundaries shifted by `offset` metres.
  BoundarySet shifted(double offset) const;

 private:
  std::array<GaussianScalar, 4> boundaries_;
  BoundarySource source_;
};

struct BoundaryDefaults {
  double center_halfwidth = 1.75;  // m, half of a 3.5 m lane
  double std = 0.3;                // m
  double outer_std_inflation = 1.5;
};

/// Outer boundaries from the inner lane width: b1 = b2 - w, b4 = b3 + w with
/// w = mu(b3) - mu(b2) and stds inflated by `outer_std_inflation`. Without an
/// inner pair, b2/b3 are +-center_halfwidth with the default std.
BoundarySet extrapolate_boundaries(
    const std::optional<std::pair<GaussianScalar, GaussianScalar>>& inner,
    const BoundaryDefaults& defaults = {});

struct OccupancyResult {
  PathPosterior posterior;
  // Set when the per-boundary CDF values were not monotone (possible with
  // very different boundary stds) and had to be made monotone.
  bool monotonized = false;
};

/// Inverse measurement model p(l | z): difference of Gaussian CDFs at the two
/// boundaries delimiting each region, with sigma_eff = sqrt(s_obj^2 + s_bnd^2)
/// per boundary. A zero sigma_eff degenerates to a step with 0.5 on a tie.
OccupancyResult lane_occupancy_detailed(const GaussianScalar& object, const BoundarySet& bounds);

inline PathPosterior lane_occupancy(const GaussianScalar& object, const BoundarySet& bounds) {
  return lane_occupancy_detailed(object, bounds).posterior;
}

}  // namespace pathassign
