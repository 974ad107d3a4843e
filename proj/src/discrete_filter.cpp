#include "pathassign/discrete_filter.hpp"

#include <algorithm>
#include <cmath>

namespace pathassign {

double TransitionParams::max_abs_eta() const {
  return std::max(0.0, std::min(epsilon, 1.0 - 3.0 * epsilon));
}

ClampedParams clamp_transition_params(const TransitionParams& params) {
  if (std::isnan(params.epsilon) || std::isnan(params.eta)) {
    throw InputError("transition parameters must not be NaN");
  }
  ClampedParams out{params, false};
  out.params.epsilon = std::clamp(params.epsilon, 0.0, TransitionParams::kMaxEpsilon);
  const double bound = out.params.max_abs_eta();
  out.params.eta = std::clamp(params.eta, -bound, bound);
  out.clamped = out.params.epsilon != params.epsilon || out.params.eta != params.eta;
  return out;
}

TransitionMatrix build_transition_matrix(const TransitionParams& params) {
  const auto [p, clamped] = clamp_transition_params(params);
  const double e = p.epsilon;
  const double h = p.eta;
  const double abs_h = std::abs(h);

  const double stay = 1.0 - 2.0 * e - abs_h;
  const double toward_lower = e + 0.5 * abs_h - h;
  const double toward_higher = e + 0.5 * abs_h + h;

  TransitionMatrix::Entries m{};
  m[0][0] = 1.0 - e - h;
  m[1][0] = e + h;
  for (std::size_t j = 1; j <= 3; ++j) {
    m[j - 1][j] = toward_lower;
    m[j][j] = stay;
    m[j + 1][j] = toward_higher;
  }
  m[3][4] = e - h;
  m[4][4] = 1.0 - e + h;

  TransitionMatrix out(m);
  out.clamped_ = clamped;
  return out;
}

PathPosterior predict(const PathPosterior& prior, const TransitionMatrix& m) {
  PathPosterior::Probs out{};
  for (std::size_t i = 0; i < kNumPaths; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < kNumPaths; ++j) acc += m(i, j) * prior[j];
    out[i] = acc;
  }
  return PathPosterior::normalized(out);
}

UpdateResult update_detailed(const PathPosterior& predicted, const PathPosterior& inv_meas) {
  PathPosterior::Probs product{};
  double sum = 0.0;
  for (std::size_t i = 0; i < kNumPaths; ++i) {
    product[i] = predicted[i] * inv_meas[i];
    sum += product[i];
  }
  if (!(sum > 0.0)) return {inv_meas, true};
  return {PathPosterior::normalized(product), false};
}

PathPosterior step(const PathPosterior& state, const TransitionParams& params,
                   const GaussianScalar& object, const BoundarySet& bounds) {
  return update(predict(state, build_transition_matrix(params)), lane_occupancy(object, bounds));
}

}  // namespace pathassign
