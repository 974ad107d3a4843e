#pragma once

#include "pathassign/likelihood.hpp"
#include "pathassign/types.hpp"

namespace pathassign {

// Scalar Kalman filter on the lateral path coordinate.
//   x_{k+1} = x_k + dt u_k + dt nu_k,   nu_k ~ N(0, sigma_nu^2)
//   z_k     = x_k + w_k,                w_k ~ N(0, sigma_z^2)

struct KalmanState {
  double mean = 0.0;      // m
  double variance = 0.0;  // m^2
  double timestamp = 0.0;

  GaussianScalar as_gaussian() const;
};

struct ProcessNoise {
  double sigma_nu = 0.1;  // m/s
};

/// State from a first measurement: mean = z.mean, variance = z.std^2.
KalmanState kf_initialize(const GaussianScalar& z, double timestamp);

/// Time update over dt > 0 with lateral velocity input u.
KalmanState kf_predict(const KalmanState& state, double u, double dt, const ProcessNoise& noise);

/// Measurement update. An infinite z.std leaves the state unchanged. Throws
/// InputError when both variances are zero and the means disagree.
KalmanState kf_update(const KalmanState& state, const GaussianScalar& z);

/// Normalized innovation (z - mean) / sqrt(P + sigma_z^2) for the given prior.
double normalized_innovation(const KalmanState& prior, const GaussianScalar& z);

/// Filtered Gaussian mapped through the inverse measurement model.
PathPosterior discretize_posterior(const KalmanState& state, const BoundarySet& bounds);

}  // namespace pathassign
