#include "pathassign/mc_validate.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "pathassign/likelihood.hpp"

namespace pathassign {
namespace {

std::vector<double> random_distribution(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(n);
  double sum = 0.0;
  for (double& x : p) sum += (x = e(rng));
  for (double& x : p) x /= sum;
  return p;
}

std::vector<double> edges(double lo, double hi, std::size_t bins) {
  std::vector<double> out(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / bins;
  return out;
}

TEST(Hellinger, IdenticalDistributionsAreAtZero) {
  const std::vector<double> p{0.1, 0.2, 0.3, 0.4};
  EXPECT_EQ(hellinger_distance(p, p), 0.0);
}

TEST(Hellinger, DisjointSupportsAreAtOne) {
  const std::vector<double> p{0.5, 0.5, 0.0, 0.0};
  const std::vector<double> q{0.0, 0.0, 0.25, 0.75};
  EXPECT_DOUBLE_EQ(hellinger_distance(p, q), 1.0);
}

TEST(Hellinger, ShiftedGaussiansMatchClosedForm) {
  // H^2 = 1 - exp(-(mu1 - mu2)^2 / (8 sigma^2)) for equal sigma.
  const double sigma = 1.0;
  const auto e = edges(-12.0, 14.0, 20000);
  const auto p = gaussian_bin_masses(e, {0.0, sigma});
  const auto q = gaussian_bin_masses(e, {2.0 * sigma, sigma});
  const double closed_form = std::sqrt(1.0 - std::exp(-0.5));
  EXPECT_NEAR(closed_form, 0.627, 1e-3);
  EXPECT_NEAR(hellinger_distance(p, q), closed_form, 0.01);
}

TEST(Hellinger, IsSymmetricAndSatisfiesTriangleInequality) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    const auto p = random_distribution(rng, 12);
    const auto q = random_distribution(rng, 12);
    const auto r = random_distribution(rng, 12);
    const double pq = hellinger_distance(p, q);
    EXPECT_EQ(pq, hellinger_distance(q, p));
    EXPECT_LE(pq, hellinger_distance(p, r) + hellinger_distance(r, q) + 1e-12);
    EXPECT_GE(pq, 0.0);
    EXPECT_LE(pq, 1.0);
  }
}

TEST(Hellinger, RejectsMismatchedOrUnnormalizedInput) {
  EXPECT_THROW(hellinger_distance(std::vector<double>{0.5, 0.5}, std::vector<double>{1.0}), InputError);
  EXPECT_THROW(hellinger_distance(std::vector<double>{0.5, 0.6}, std::vector<double>{0.5, 0.5}), InputError);
  EXPECT_THROW(hellinger_distance(std::vector<double>{1.5, -0.5}, std::vector<double>{0.5, 0.5}), InputError);
}

TEST(Histogram, EdgeValuesLandInsideRange) {
  const auto e = edges(0.0, 1.0, 4);
  const auto h = normalized_histogram(e, std::vector<double>{0.0, 0.25, 1.0, 2.0});
  EXPECT_DOUBLE_EQ(h[0], 1.0 / 3);
  EXPECT_DOUBLE_EQ(h[1], 1.0 / 3);
  EXPECT_DOUBLE_EQ(h[3], 1.0 / 3);
}

TEST(GaussianBinMasses, DegenerateGaussianFillsOneBin) {
  const auto e = edges(0.0, 1.0, 10);
  const auto m = gaussian_bin_masses(e, {0.55, 0.0});
  EXPECT_DOUBLE_EQ(m[5], 1.0);
}

TEST(McValidate, ZeroCovarianceIsLimitedByBinning) {
  McGridPoint point{30.0, 2.0, 20.0, 0.1, 0.0, 0.0, 0.0, 0.0};
  McOptions options;
  options.bins = 50;
  const auto result = mc_validate_point(point, 0, options);
  ASSERT_EQ(result.status, McStatus::kOk);
  EXPECT_LE(result.hellinger, 0.2);
}

TEST(McValidate, ModerateNoiseIsCloseToTaylorGaussian) {
  McGridPoint point{40.0, 1.0, 25.0, 0.05, 0.25, 0.25, 0.01, 1e-5};
  const auto result = mc_validate_point(point, 3, {});
  ASSERT_EQ(result.status, McStatus::kOk);
  EXPECT_LT(result.hellinger, 0.15);
}

TEST(McValidate, InvalidPointIsSkipped) {
  McGridPoint point{30.0, 2.0, 0.0, 0.1, 0.0, 0.0, 0.0, 0.0};
  const auto result = mc_validate_point(point, 0, {});
  EXPECT_EQ(result.status, McStatus::kSkipped);
  EXPECT_TRUE(std::isnan(result.hellinger));
}

TEST(McValidate, OutputIsDeterministicAndIndependentOfThreads) {
  McGridSpec spec = McGridSpec::uniform(3, 2, 2, 2);
  const auto grid = spec.expand();
  ASSERT_EQ(grid.size(), 24u);
  McOptions options;
  options.samples_per_point = 500;
  options.seed = 42;
  options.threads = 1;
  std::ostringstream a, b, c;
  write_mc_csv(a, mc_validate(grid, options));
  write_mc_csv(b, mc_validate(grid, options));
  options.threads = 4;
  write_mc_csv(c, mc_validate(grid, options));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str(), c.str());
}

TEST(McValidate, CsvHasHeaderAndOneRowPerPoint) {
  const std::vector<McGridPoint> grid{{30.0, 2.0, 20.0, 0.1, 0.1, 0.1, 0.01, 1e-5},
                                      {30.0, 2.0, 0.0, 0.1, 0.0, 0.0, 0.0, 0.0}};
  McOptions options;
  options.samples_per_point = 200;
  std::ostringstream os;
  write_mc_csv(os, mc_validate(grid, options));
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,y,v,yaw_rate,var_x,var_y,var_v,var_yaw,hellinger,status");
  std::getline(in, line);
  EXPECT_TRUE(line.ends_with(",ok"));
  std::getline(in, line);
  EXPECT_TRUE(line.ends_with(",,skipped"));
  EXPECT_FALSE(std::getline(in, line));
}

TEST(McGridSpec, RejectsValuesOutsideTheValidatedDomain) {
  McGridSpec spec = McGridSpec::uniform(2, 2, 2, 2);
  spec.v.push_back(80.0);
  EXPECT_THROW(spec.expand(), InputError);
  spec = McGridSpec::uniform(2, 2, 2, 2);
  spec.x.clear();
  EXPECT_THROW(spec.expand(), InputError);
}

}  // namespace
}  // namespace pathassign
