#include "pathassign/likelihood.hpp"

#include <cmath>
#include <numbers>
#include <tuple>

namespace pathassign {

double std_normal_cdf(double t) {
  if (std::isnan(t)) throw InputError("std_normal_cdf: NaN argument");
  return 0.5 * std::erfc(-t / std::numbers::sqrt2);
}

BoundarySet::BoundarySet(const std::array<GaussianScalar, 4>& boundaries, BoundarySource source)
    : boundaries_(boundaries), source_(source) {
  for (const auto& b : boundaries_) b.validate();
  for (std::size_t i = 1; i < boundaries_.size(); ++i) {
    if (!(boundaries_[i - 1].mean < boundaries_[i].mean)) {
      throw InputError("BoundarySet: boundary means must be strictly increasing");
    }
  }
}

BoundarySet BoundarySet::shifted(double offset) const {
  auto b = boundaries_;
  for (auto& g : b) g.mean += offset;
  return BoundarySet(b, source_);
}

BoundarySet extrapolate_boundaries(
    const std::optional<std::pair<GaussianScalar, GaussianScalar>>& inner,
    const BoundaryDefaults& defaults) {
  GaussianScalar b2{-defaults.center_halfwidth, defaults.std};
  GaussianScalar b3{defaults.center_halfwidth, defaults.std};
  BoundarySource source = BoundarySource::kDefault;
  if (inner) {
    std::tie(b2, b3) = *inner;
    source = BoundarySource::kExtrapolated;
  }
  b2.validate();
  b3.validate();
  const double width = b3.mean - b2.mean;
  if (!(width > 0.0)) throw InputError("extrapolate_boundaries: nonpositive inner lane width");

  const GaussianScalar b1{b2.mean - width, b2.std * defaults.outer_std_inflation};
  const GaussianScalar b4{b3.mean + width, b3.std * defaults.outer_std_inflation};
  return BoundarySet({b1, b2, b3, b4}, source);
}

OccupancyResult lane_occupancy_detailed(const GaussianScalar& object, const BoundarySet& bounds) {
  object.validate();

  // cdf[l] = P(object left of boundary l), l = 0..5 with virtual outer boundaries.
  std::array<double, kNumPaths + 1> cdf{};
  cdf.front() = 0.0;
  cdf.back() = 1.0;
  bool monotonized = false;
  for (std::size_t l = 1; l <= 4; ++l) {
    const GaussianScalar& b = bounds[l - 1];
    const double sigma_eff = std::hypot(object.std, b.std);
    const double gap = b.mean - object.mean;
    double value;
    if (sigma_eff > 0.0) {
      value = std_normal_cdf(gap / sigma_eff);
    } else {
      value = gap > 0.0 ? 1.0 : (gap < 0.0 ? 0.0 : 0.5);
    }
    if (value < cdf[l - 1]) {
      value = cdf[l - 1];
      monotonized = true;
    }
    cdf[l] = value;
  }

  PathPosterior::Probs p{};
  for (std::size_t l = 0; l < kNumPaths; ++l) p[l] = cdf[l + 1] - cdf[l];
  return {PathPosterior(p), monotonized};
}

}  // namespace pathassign
