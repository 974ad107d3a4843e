#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathassign {

// Thrown when an argument violates an operation's input domain.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a derivative is requested at a point where it does not exist.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// One-dimensional Gaussian given by mean and standard deviation.
struct GaussianScalar {
  double mean = 0.0;
  double std = 0.0;

  double variance() const { return std * std; }

  /// Throws InputError unless std is finite and nonnegative and mean is finite.
  void validate() const;

  friend bool operator==(const GaussianScalar&, const GaussianScalar&) = default;
};

inline constexpr std::size_t kNumPaths = 5;

/// Path index per lane layout: 0..4, with 2 the host path. Indices increase
/// with the lateral path coordinate, so 4 is the outermost region on the
/// positive-y side.
class PathIndex {
 public:
  static constexpr int kHost = 2;

  constexpr PathIndex() = default;
  explicit PathIndex(int value);

  constexpr int value() const { return value_; }
  constexpr PathIndex reversed() const { return PathIndex(Unchecked{}, 4 - value_); }

  friend constexpr bool operator==(PathIndex, PathIndex) = default;

 private:
  struct Unchecked {};
  constexpr PathIndex(Unchecked, int v) : value_(v) {}
  int value_ = kHost;
};

/// Discrete distribution over the five path indices.
class PathPosterior {
 public:
  using Probs = std::array<double, kNumPaths>;

  /// Uniform distribution.
  PathPosterior();

  /// Validates nonnegativity and that the entries sum to 1 within 1e-9.
  explicit PathPosterior(const Probs& probs);

  static PathPosterior uniform() { return PathPosterior(); }
  static PathPosterior delta(PathIndex index);

  /// Scales nonnegative weights to unit sum. Throws InputError if all are zero.
  static PathPosterior normalized(const Probs& weights);

  const Probs& probs() const { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }
  double operator[](PathIndex i) const { return probs_[static_cast<std::size_t>(i.value())]; }

  PathPosterior reversed() const;

  friend bool operator==(const PathPosterior&, const PathPosterior&) = default;

 private:
  struct Unchecked {};
  PathPosterior(Unchecked, const Probs& probs) : probs_(probs) {}
  Probs probs_;
};

std::string to_string(const PathPosterior& p);

}  // namespace pathassign
