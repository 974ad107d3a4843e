#include "pathassign/estimator.hpp"

#include <algorithm>

namespace pathassign {
namespace {

// Absorbs rounding in cumulative sums of decimal inputs such as 0.1 + 0.2 + 0.2.
constexpr double kCumulativeSlack = 1e-12;

}  // namespace

PathIndex median_index(const PathPosterior& posterior) {
  double cumulative = 0.0;
  for (std::size_t l = 0; l < kNumPaths; ++l) {
    cumulative += posterior[l];
    if (posterior[l] > 0.0 && cumulative >= 0.5 - kCumulativeSlack) {
      return PathIndex(static_cast<int>(l));
    }
  }
  // Unreachable for a valid posterior; keeps the last index with mass.
  for (std::size_t l = kNumPaths; l-- > 0;) {
    if (posterior[l] > 0.0) return PathIndex(static_cast<int>(l));
  }
  return PathIndex(PathIndex::kHost);
}

Assignment assign(const PathPosterior& posterior, double p_min) {
  if (!(p_min >= 0.0 && p_min <= 1.0)) throw InputError("assign: p_min outside [0,1]");
  const PathIndex index = median_index(posterior);
  const double mass = posterior[index];
  return {index, mass, mass >= p_min};
}

PathIndex map_index(const PathPosterior& posterior) {
  const auto& p = posterior.probs();
  return PathIndex(static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin()));
}

double mean_index(const PathPosterior& posterior) {
  double m = 0.0;
  for (std::size_t l = 0; l < kNumPaths; ++l) m += static_cast<double>(l) * posterior[l];
  return m;
}

}  // namespace pathassign
