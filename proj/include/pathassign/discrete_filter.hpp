#pragma once

#include <array>

#include "pathassign/likelihood.hpp"
#include "pathassign/types.hpp"

namespace pathassign {

/// epsilon: default neighbor-transition probability per step.
/// eta: signed asymmetry; positive values favour transitions toward higher
/// path indices.
struct TransitionParams {
  double epsilon = 0.01;
  double eta = 0.0;

  static constexpr double kMaxEpsilon = 0.3;

  /// Largest admissible |eta| for this epsilon: min(eps, 1 - 3 eps).
  double max_abs_eta() const;
};

struct ClampedParams {
  TransitionParams params;
  bool clamped = false;
};

/// Projects (epsilon, eta) onto epsilon in [0, 0.3], |eta| <= min(eps, 1 - 3 eps).
ClampedParams clamp_transition_params(const TransitionParams& params);

/// Column-stochastic 5x5 matrix, entry(i, j) = p(l_k = i | l_{k-1} = j).
class TransitionMatrix {
 public:
  using Entries = std::array<std::array<double, kNumPaths>, kNumPaths>;

  explicit TransitionMatrix(const Entries& entries) : entries_(entries) {}

  double operator()(std::size_t row, std::size_t col) const { return entries_[row][col]; }
  const Entries& entries() const { return entries_; }

  /// Whether the parameters had to be clamped to build this matrix.
  bool clamped() const { return clamped_; }

 private:
  friend TransitionMatrix build_transition_matrix(const TransitionParams&);
  Entries entries_;
  bool clamped_ = false;
};

/// Banded perturbation of the identity:
///
///   | 1-e-h      e+|h|/2-h                                            |
///   | e+h        1-2e-|h|   e+|h|/2-h                                 |
///   |            e+|h|/2+h  1-2e-|h|   e+|h|/2-h                      |
///   |                       e+|h|/2+h  1-2e-|h|   e-h                 |
///   |                                  e+|h|/2+h  1-e+h               |
///
/// The (3, 4) corner entry is e - h so the last column sums to one. Out-of-domain
/// parameters are clamped first (see clamp_transition_params).
TransitionMatrix build_transition_matrix(const TransitionParams& params);

/// p(l_k | Z_{k-1}) = sum_j M(l_k, j) p(j | Z_{k-1}).
PathPosterior predict(const PathPosterior& prior, const TransitionMatrix& m);

struct UpdateResult {
  PathPosterior posterior;
  bool reset = false;  // product was identically zero; posterior = inverse measurement
};

/// Bayes update with an inverse measurement model under a uniform prior on l:
/// elementwise product, renormalized.
UpdateResult update_detailed(const PathPosterior& predicted, const PathPosterior& inv_meas);

inline PathPosterior update(const PathPosterior& predicted, const PathPosterior& inv_meas) {
  return update_detailed(predicted, inv_meas).posterior;
}

/// update(predict(state, M(params)), lane_occupancy(object, bounds)).
PathPosterior step(const PathPosterior& state, const TransitionParams& params,
                   const GaussianScalar& object, const BoundarySet& bounds);

/// eta driven by the object's lateral velocity (positive toward higher y_P)
/// plus an optional indicator term. Not clamped; build_transition_matrix does that.
inline double eta_from_lateral_velocity(double lateral_velocity, double gain,
                                        double indicator_term = 0.0) {
  return gain * lateral_velocity + indicator_term;
}

}  // namespace pathassign
