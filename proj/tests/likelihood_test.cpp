#include "pathassign/likelihood.hpp"

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

namespace pathassign {
namespace {

// Phi(t) = 1/2 + phi(t) * sum_n t^(2n+1) / (1*3*...*(2n+1)), summed in long double.
long double normal_cdf_series(long double t) {
  long double term = t;
  long double sum = t;
  for (int n = 1; n < 500; ++n) {
    term *= t * t / (2 * n + 1);
    sum += term;
    if (std::abs(term) < 1e-30L * std::abs(sum)) break;
  }
  const long double pdf = std::exp(-t * t / 2) / std::sqrt(2 * 3.14159265358979323846264338327950288L);
  return 0.5L + pdf * sum;
}

BoundarySet standard_bounds(double sigma = 0.0) {
  return BoundarySet({GaussianScalar{-5.25, sigma}, {-1.75, sigma}, {1.75, sigma}, {5.25, sigma}},
                     BoundarySource::kMeasured);
}

double sum(const PathPosterior& p) {
  double s = 0.0;
  for (double x : p.probs()) s += x;
  return s;
}

TEST(StdNormalCdf, KnownValues) {
  EXPECT_EQ(std_normal_cdf(0.0), 0.5);
  EXPECT_EQ(std_normal_cdf(std::numeric_limits<double>::infinity()), 1.0);
  EXPECT_EQ(std_normal_cdf(-std::numeric_limits<double>::infinity()), 0.0);
  const double oracle = static_cast<double>(normal_cdf_series(1.959964L));
  EXPECT_NEAR(oracle, 0.975, 1e-6);
  EXPECT_NEAR(std_normal_cdf(1.959964), oracle, 1e-12);
}

TEST(StdNormalCdf, MatchesSeriesOracle) {
  for (double t = -6.0; t <= 6.0; t += 0.125) {
    EXPECT_NEAR(std_normal_cdf(t), static_cast<double>(normal_cdf_series(t)), 1e-12) << t;
  }
}

TEST(StdNormalCdf, RejectsNaN) {
  EXPECT_THROW(std_normal_cdf(std::numeric_limits<double>::quiet_NaN()), InputError);
}

TEST(LaneOccupancy, CenteredObjectIsInHostPath) {
  const auto p = lane_occupancy({0.0, 0.3}, standard_bounds());
  const double oracle = 2.0 * static_cast<double>(normal_cdf_series(1.75L / 0.3L)) - 1.0;
  EXPECT_NEAR(p[2], oracle, 1e-12);
  EXPECT_GE(p[2], 0.9999);
  for (std::size_t l : {0u, 1u, 3u, 4u}) EXPECT_LE(p[l], 1e-4);
}

TEST(LaneOccupancy, ObjectOnBoundarySplitsEvenly) {
  const BoundarySet far({GaussianScalar{-50.0, 0.0}, {-1.75, 0.0}, {1.75, 0.0}, {50.0, 0.0}},
                        BoundarySource::kMeasured);
  const auto p = lane_occupancy({1.75, 0.3}, far);
  EXPECT_NEAR(p[2], 0.5, 1e-6);
  EXPECT_NEAR(p[3], 0.5, 1e-6);
}

TEST(LaneOccupancy, DegenerateGaussianIsAnIndicatorWithTieSplit) {
  const auto inside = lane_occupancy({3.0, 0.0}, standard_bounds());
  EXPECT_EQ(inside, PathPosterior::delta(PathIndex(3)));
  const auto tie = lane_occupancy({1.75, 0.0}, standard_bounds());
  EXPECT_EQ(tie[2], 0.5);
  EXPECT_EQ(tie[3], 0.5);
}

TEST(LaneOccupancy, SumsToOneForRandomInputs) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> mu(-10.0, 10.0), sd(0.0, 3.0), gap(0.1, 5.0);
  for (int i = 0; i < 10000; ++i) {
    std::array<GaussianScalar, 4> b;
    double m = mu(rng);
    for (auto& g : b) {
      g = {m, sd(rng)};
      m += gap(rng);
    }
    const auto p = lane_occupancy({mu(rng), sd(rng)}, BoundarySet(b, BoundarySource::kMeasured));
    EXPECT_NEAR(sum(p), 1.0, 1e-12);
    for (double x : p.probs()) {
      EXPECT_GE(x, 0.0);
      EXPECT_LE(x, 1.0);
    }
  }
}

TEST(LaneOccupancy, UnequalBoundaryStdsStayNonnegative) {
  // A very uncertain left boundary next to a sharp right one would give a
  // negative difference of CDFs for objects far to the right.
  const BoundarySet b({GaussianScalar{-5.0, 0.1}, {-1.0, 10.0}, {1.0, 0.01}, {5.0, 0.1}},
                      BoundarySource::kMeasured);
  const auto r = lane_occupancy_detailed({3.0, 0.0}, b);
  EXPECT_TRUE(r.monotonized);
  EXPECT_EQ(r.posterior[2], 0.0);
  EXPECT_NEAR(sum(r.posterior), 1.0, 1e-15);
}

TEST(LaneOccupancy, IntegralOverObjectPositionRecoversLaneWidth) {
  const BoundarySet b({GaussianScalar{-6.0, 0.3}, {-2.0, 0.3}, {1.5, 0.3}, {5.0, 0.3}},
                      BoundarySource::kMeasured);
  const double sigma_obj = 0.4;
  auto integrate = [&](std::size_t lane, double half_range) {
    const int n = 20000;  // Simpson, even
    const double h = 2.0 * half_range / n;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      acc += w * lane_occupancy({-half_range + i * h, sigma_obj}, b)[lane];
    }
    return acc * h / 3.0;
  };
  EXPECT_NEAR(integrate(1, 40.0), 4.0, 0.04);
  EXPECT_NEAR(integrate(2, 40.0), 3.5, 0.035);
  EXPECT_NEAR(integrate(3, 40.0), 3.5, 0.035);
  // Outer regions are half-open: their integral keeps growing with the range.
  EXPECT_GT(integrate(0, 80.0), integrate(0, 40.0) + 39.0);
  EXPECT_GT(integrate(4, 80.0), integrate(4, 40.0) + 39.0);
}

TEST(LaneOccupancy, ShapeDependsOnEffectiveSigma) {
  const auto narrow = lane_occupancy({0.0, 0.3}, standard_bounds());
  const auto wide = lane_occupancy({0.0, 2.0}, standard_bounds());
  EXPECT_GT(narrow[2], 0.99);
  EXPECT_LT(wide[2], 0.65);
}

TEST(LaneOccupancy, TranslationEquivariance) {
  const auto base = lane_occupancy({0.75, 0.5}, standard_bounds(0.25));
  for (double shift : {-8.0, -0.5, 0.25, 3.0, 16.0}) {
    const auto moved = lane_occupancy({0.75 + shift, 0.5}, standard_bounds(0.25).shifted(shift));
    EXPECT_EQ(base, moved) << shift;
  }
}

TEST(LaneOccupancy, OuterRegionsAreMonotoneInObjectPosition) {
  double last0 = 1.0;
  double last4 = 0.0;
  for (double mu = -15.0; mu <= 15.0; mu += 0.05) {
    const auto p = lane_occupancy({mu, 0.7}, standard_bounds(0.3));
    EXPECT_LE(p[0], last0);
    EXPECT_GE(p[4], last4);
    last0 = p[0];
    last4 = p[4];
  }
}

TEST(ExtrapolateBoundaries, FromInnerPair) {
  const auto b = extrapolate_boundaries(std::pair{GaussianScalar{-1.75, 0.1}, GaussianScalar{1.75, 0.1}});
  EXPECT_EQ(b.source(), BoundarySource::kExtrapolated);
  EXPECT_DOUBLE_EQ(b[0].mean, -5.25);
  EXPECT_DOUBLE_EQ(b[1].mean, -1.75);
  EXPECT_DOUBLE_EQ(b[2].mean, 1.75);
  EXPECT_DOUBLE_EQ(b[3].mean, 5.25);
  EXPECT_NEAR(b[0].std, 0.15, 1e-15);
  EXPECT_NEAR(b[3].std, 0.15, 1e-15);
  EXPECT_EQ(b[1].std, 0.1);
}

TEST(ExtrapolateBoundaries, AsymmetricInnerPair) {
  const auto b = extrapolate_boundaries(std::pair{GaussianScalar{-2.0, 0.0}, GaussianScalar{1.0, 0.0}});
  EXPECT_EQ(b[0].mean, -5.0);
  EXPECT_EQ(b[3].mean, 4.0);
  EXPECT_EQ(b[0].std, 0.0);
}

TEST(ExtrapolateBoundaries, DefaultsWhenNothingDetected) {
  const auto b = extrapolate_boundaries(std::nullopt);
  EXPECT_EQ(b.source(), BoundarySource::kDefault);
  EXPECT_DOUBLE_EQ(b[0].mean, -5.25);
  EXPECT_DOUBLE_EQ(b[3].mean, 5.25);
  EXPECT_DOUBLE_EQ(b[1].std, 0.3);
  EXPECT_DOUBLE_EQ(b[0].std, 0.45);
}

TEST(ExtrapolateBoundaries, RejectsNonpositiveWidth) {
  EXPECT_THROW(extrapolate_boundaries(std::pair{GaussianScalar{1.0, 0.1}, GaussianScalar{1.0, 0.1}}),
               InputError);
  EXPECT_THROW(extrapolate_boundaries(std::pair{GaussianScalar{1.0, 0.1}, GaussianScalar{-1.0, 0.1}}),
               InputError);
}

TEST(BoundarySet, RequiresIncreasingMeans) {
  EXPECT_THROW(BoundarySet({GaussianScalar{-1.0, 0.1}, {-2.0, 0.1}, {1.0, 0.1}, {2.0, 0.1}},
                           BoundarySource::kMeasured),
               InputError);
  EXPECT_THROW(BoundarySet({GaussianScalar{-1.0, -0.1}, {0.0, 0.1}, {1.0, 0.1}, {2.0, 0.1}},
                           BoundarySource::kMeasured),
               InputError);
}

}  // namespace
}  // namespace pathassign
