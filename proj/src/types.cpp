#include "pathassign/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace pathassign {

void GaussianScalar::validate() const {
  if (!std::isfinite(mean)) throw InputError("GaussianScalar: mean is not finite");
  if (!std::isfinite(std) || std < 0.0) {
    throw InputError("GaussianScalar: std must be finite and nonnegative");
  }
}

PathIndex::PathIndex(int value) : value_(value) {
  if (value < 0 || value >= static_cast<int>(kNumPaths)) {
    throw InputError("PathIndex out of range: " + std::to_string(value));
  }
}

PathPosterior::PathPosterior() { probs_.fill(1.0 / kNumPaths); }

PathPosterior::PathPosterior(const Probs& probs) : probs_(probs) {
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("PathPosterior: entry outside [0,1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InputError("PathPosterior: entries sum to " + std::to_string(sum));
  }
}

PathPosterior PathPosterior::delta(PathIndex index) {
  Probs p{};
  p[static_cast<std::size_t>(index.value())] = 1.0;
  return PathPosterior(Unchecked{}, p);
}

PathPosterior PathPosterior::normalized(const Probs& weights) {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw InputError("PathPosterior: negative or non-finite weight");
    sum += w;
  }
  if (!(sum > 0.0)) throw InputError("PathPosterior: all weights are zero");
  Probs p{};
  std::transform(weights.begin(), weights.end(), p.begin(), [sum](double w) { return w / sum; });
  return PathPosterior(Unchecked{}, p);
}

PathPosterior PathPosterior::reversed() const {
  Probs p = probs_;
  std::reverse(p.begin(), p.end());
  return PathPosterior(Unchecked{}, p);
}

std::string to_string(const PathPosterior& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < kNumPaths; ++i) os << (i ? ", " : "") << p[i];
  os << ')';
  return os.str();
}

}  // namespace pathassign
