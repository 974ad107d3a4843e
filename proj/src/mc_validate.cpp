#include "pathassign/mc_validate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <thread>

#include "pathassign/geometry.hpp"
#include "pathassign/likelihood.hpp"

namespace pathassign {
namespace {

void require_distribution(std::span<const double> p, const char* name) {
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= 0.0)) throw InputError(std::string("hellinger_distance: negative mass in ") + name);
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InputError(std::string("hellinger_distance: ") + name + " does not sum to 1");
  }
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) throw InputError("grid axis needs at least one level");
  if (n == 1) return {0.5 * (lo + hi)};
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

void check_axis(const std::vector<double>& axis, double lo, double hi, const char* name) {
  if (axis.empty()) throw InputError(std::string("empty grid axis: ") + name);
  for (double value : axis) {
    if (!(value >= lo && value <= hi)) {
      throw InputError(std::string("grid value outside range for ") + name);
    }
  }
}

std::vector<double> uniform_edges(double lo, double hi, std::size_t bins) {
  std::vector<double> edges(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) {
    edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
  }
  return edges;
}

std::size_t bin_of(std::span<const double> edges, double value) {
  const auto it = std::upper_bound(edges.begin(), edges.end(), value);
  const auto idx = static_cast<std::size_t>(it - edges.begin());
  return std::min(idx == 0 ? 0 : idx - 1, edges.size() - 2);
}

}  // namespace

double hellinger_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw InputError("hellinger_distance: bin counts differ");
  if (p.empty()) throw InputError("hellinger_distance: no bins");
  require_distribution(p, "p");
  require_distribution(q, "q");
  // 1 - sum sqrt(p q) written as half the squared distance of the square roots,
  // which is exactly zero for identical inputs.
  double sq = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = std::sqrt(p[i]) - std::sqrt(q[i]);
    sq += d * d;
  }
  return std::sqrt(std::clamp(0.5 * sq, 0.0, 1.0));
}

std::vector<double> gaussian_bin_masses(std::span<const double> edges, const GaussianScalar& g) {
  if (edges.size() < 2) throw InputError("gaussian_bin_masses: need at least one bin");
  g.validate();
  const std::size_t bins = edges.size() - 1;
  std::vector<double> mass(bins, 0.0);
  if (g.std == 0.0) {
    if (g.mean >= edges.front() && g.mean <= edges.back()) mass[bin_of(edges, g.mean)] = 1.0;
    return mass;
  }
  double total = 0.0;
  double lower = std_normal_cdf((edges[0] - g.mean) / g.std);
  for (std::size_t i = 0; i < bins; ++i) {
    const double upper = std_normal_cdf((edges[i + 1] - g.mean) / g.std);
    mass[i] = std::max(0.0, upper - lower);
    total += mass[i];
    lower = upper;
  }
  if (total > 0.0) {
    for (double& m : mass) m /= total;
  }
  return mass;
}

std::vector<double> normalized_histogram(std::span<const double> edges,
                                         std::span<const double> samples) {
  if (edges.size() < 2) throw InputError("normalized_histogram: need at least one bin");
  std::vector<double> hist(edges.size() - 1, 0.0);
  std::size_t counted = 0;
  for (double s : samples) {
    if (!(s >= edges.front() && s <= edges.back())) continue;
    hist[bin_of(edges, s)] += 1.0;
    ++counted;
  }
  if (counted > 0) {
    for (double& h : hist) h /= static_cast<double>(counted);
  }
  return hist;
}

McGridSpec McGridSpec::uniform(std::size_t x_levels, std::size_t bearing_levels,
                               std::size_t v_levels, std::size_t yaw_levels) {
  McGridSpec spec;
  spec.x = linspace(1.0, 110.0, x_levels);
  spec.bearing_deg = linspace(-21.0, 21.0, bearing_levels);
  spec.v = linspace(1.0, 70.0, v_levels);
  spec.yaw_rate = linspace(-0.7, 0.7, yaw_levels);
  return spec;
}

std::vector<McGridPoint> McGridSpec::expand() const {
  check_axis(x, 1.0, 110.0, "x");
  check_axis(bearing_deg, -21.0, 21.0, "bearing");
  check_axis(v, 1.0, 70.0, "v");
  check_axis(yaw_rate, -0.7, 0.7, "yaw_rate");
  for (double var : {var_x, var_y, var_v, var_yaw}) {
    if (!(var >= 0.0) || !std::isfinite(var)) throw InputError("grid variances must be finite and >= 0");
  }
  std::vector<McGridPoint> points;
  points.reserve(x.size() * bearing_deg.size() * v.size() * yaw_rate.size());
  for (double xi : x) {
    for (double bearing : bearing_deg) {
      const double yi = xi * std::tan(bearing * std::numbers::pi / 180.0);
      for (double vi : v) {
        for (double wi : yaw_rate) {
          points.push_back({xi, yi, vi, wi, var_x, var_y, var_v, var_yaw});
        }
      }
    }
  }
  return points;
}

McResult mc_validate_point(const McGridPoint& point, std::size_t index, const McOptions& options) {
  if (options.samples_per_point == 0 || options.bins == 0) {
    throw InputError("mc_validate: samples and bins must be positive");
  }
  McResult result{point, std::numeric_limits<double>::quiet_NaN(), McStatus::kSkipped};

  GaussianScalar taylor;
  try {
    const auto input = InputVector::diagonal(point.v, point.yaw_rate, point.x, point.y, point.var_v,
                                             point.var_yaw, point.var_x, point.var_y);
    taylor = transform_to_path(input, 0.0).offset;
  } catch (const std::exception&) {
    return result;
  }

  std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                    static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> unit(0.0, 1.0);

  const double sd_v = std::sqrt(point.var_v);
  const double sd_yaw = std::sqrt(point.var_yaw);
  const double sd_x = std::sqrt(point.var_x);
  const double sd_y = std::sqrt(point.var_y);

  std::vector<double> samples;
  samples.reserve(options.samples_per_point);
  while (samples.size() < options.samples_per_point) {
    const double v = point.v + sd_v * unit(rng);
    const double yaw = point.yaw_rate + sd_yaw * unit(rng);
    const double x = point.x + sd_x * unit(rng);
    const double y = point.y + sd_y * unit(rng);
    if (!(v > 0.0)) continue;  // truncated speed distribution
    samples.push_back(lateral_path_offset(HostState{v, yaw, 0.0, 0.0}, x, y));
  }

  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= static_cast<double>(samples.size());
  double var = 0.0;
  for (double s : samples) var += (s - mean) * (s - mean);
  var /= static_cast<double>(samples.size());
  double half_span = options.span_std * std::sqrt(var);
  const double floor_span = 1e-6 * std::max(1.0, std::abs(mean));
  if (!(half_span > floor_span)) {
    half_span = std::max(taylor.std * options.span_std, floor_span);
  }

  const auto edges = uniform_edges(mean - half_span, mean + half_span, options.bins);
  const auto hist = normalized_histogram(edges, samples);
  const auto gauss = gaussian_bin_masses(edges, taylor);
  double gauss_total = 0.0;
  for (double g : gauss) gauss_total += g;
  // A Taylor Gaussian with no mass on the sampled range is maximally distant.
  result.hellinger = gauss_total > 0.0 ? hellinger_distance(hist, gauss) : 1.0;
  result.status = McStatus::kOk;
  return result;
}

std::vector<McResult> mc_validate(std::span<const McGridPoint> grid, const McOptions& options) {
  std::vector<McResult> results(grid.size());
  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      results[i] = mc_validate_point(grid[i], i, options);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return results;
}

void write_mc_csv(std::ostream& os, std::span<const McResult> results) {
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << "x,y,v,yaw_rate,var_x,var_y,var_v,var_yaw,hellinger,status\n";
  os << std::setprecision(12);
  for (const auto& r : results) {
    const auto& p = r.point;
    os << p.x << ',' << p.y << ',' << p.v << ',' << p.yaw_rate << ',' << p.var_x << ',' << p.var_y
       << ',' << p.var_v << ',' << p.var_yaw << ',';
    if (r.status == McStatus::kOk) {
      os << r.hellinger << ",ok\n";
    } else {
      os << ",skipped\n";
    }
  }
  os.flags(flags);
  os.precision(precision);
}

}  // namespace pathassign
