#pragma once

#include <optional>

#include "pathassign/types.hpp"

namespace pathassign {

inline constexpr double kDefaultMinAssignProbability = 0.3;

struct Assignment {
  std::optional<PathIndex> index;  // median index, present even when rejected
  double probability = 0.0;        // posterior mass at the median index
  bool accepted = false;
};

/// Lowest index whose cumulative mass from the left reaches 0.5. That index
/// also has at least 0.5 to its right, so when two indices satisfy both
/// conditions (a cumulative sum of exactly 0.5) the lower one wins.
PathIndex median_index(const PathPosterior& posterior);

/// Median index, accepted iff its own mass is >= p_min.
Assignment assign(const PathPosterior& posterior, double p_min = kDefaultMinAssignProbability);

// Diagnostics only. Multimodal posteriors (oscillating host paths) make MAP
// unstable and the mean lands between modes, so neither drives assignments.
PathIndex map_index(const PathPosterior& posterior);
double mean_index(const PathPosterior& posterior);

}  // namespace pathassign
