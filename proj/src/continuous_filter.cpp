#include "pathassign/continuous_filter.hpp"

#include <algorithm>
#include <cmath>

namespace pathassign {

GaussianScalar KalmanState::as_gaussian() const {
  return {mean, std::sqrt(std::max(0.0, variance))};
}

KalmanState kf_initialize(const GaussianScalar& z, double timestamp) {
  z.validate();
  return {z.mean, z.variance(), timestamp};
}

KalmanState kf_predict(const KalmanState& state, double u, double dt, const ProcessNoise& noise) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InputError("kf_predict: dt must be positive");
  if (!std::isfinite(u)) throw InputError("kf_predict: non-finite velocity input");
  if (!(noise.sigma_nu >= 0.0)) throw InputError("kf_predict: negative process noise");
  const double q = dt * noise.sigma_nu;
  return {state.mean + dt * u, state.variance + q * q, state.timestamp + dt};
}

KalmanState kf_update(const KalmanState& state, const GaussianScalar& z) {
  if (std::isnan(z.mean) || std::isnan(z.std) || z.std < 0.0) {
    throw InputError("kf_update: invalid measurement");
  }
  if (std::isinf(z.std)) return state;
  const double r = z.variance();
  const double p = state.variance;
  if (p + r == 0.0) {
    if (z.mean != state.mean) throw InputError("kf_update: conflicting exact state and measurement");
    return state;
  }
  const double gain = p / (p + r);
  return {state.mean + gain * (z.mean - state.mean), (1.0 - gain) * p, state.timestamp};
}

double normalized_innovation(const KalmanState& prior, const GaussianScalar& z) {
  return (z.mean - prior.mean) / std::sqrt(prior.variance + z.variance());
}

PathPosterior discretize_posterior(const KalmanState& state, const BoundarySet& bounds) {
  return lane_occupancy(state.as_gaussian(), bounds);
}

}  // namespace pathassign
