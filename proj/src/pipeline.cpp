#include "pathassign/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "pathassign/geometry.hpp"

namespace pathassign {
namespace {

struct Track {
  double last_seen = 0.0;
  PathPosterior discrete;
  std::optional<KalmanState> kalman;
};

GaussianScalar object_in_path_coordinates(const HostRecord& host, const ObjectRecord& object) {
  const auto input = InputVector::diagonal(host.v, host.yaw_rate, object.x, object.y, host.var_v,
                                           host.var_yaw, object.var_x, object.var_y);
  return transform_to_path(input, host.alpha).offset;
}

BoundarySet frame_boundaries(const ScenarioFrame& frame, const BoundaryDefaults& defaults) {
  if (frame.bounds) return BoundarySet(*frame.bounds, BoundarySource::kMeasured);
  return extrapolate_boundaries(std::nullopt, defaults);
}

std::string format_param(double value) {
  std::ostringstream os;
  os << std::setprecision(6) << value;
  return os.str();
}

}  // namespace

Method parse_method(std::string_view name) {
  if (name == "discrete") return Method::kDiscrete;
  if (name == "continuous") return Method::kContinuous;
  throw InputError("unknown method: " + std::string(name));
}

std::string_view to_string(Method method) {
  return method == Method::kDiscrete ? "discrete" : "continuous";
}

std::vector<FrameResult> run_pipeline(std::span<const ScenarioFrame> frames, const PipelineConfig& config) {
  if (!(config.sigma_nu >= 0.0)) throw InputError("sigma_nu must be nonnegative");
  if (!(config.p_min >= 0.0 && config.p_min <= 1.0)) throw InputError("p_min must lie in [0,1]");

  std::vector<FrameResult> results;
  std::map<std::int64_t, Track> tracks;
  const ProcessNoise noise{config.sigma_nu};

  for (std::size_t k = 0; k < frames.size(); ++k) {
    const ScenarioFrame& frame = frames[k];
    const double t = frame.timestamp;
    if (k > 0 && !(t > frames[k - 1].timestamp)) {
      throw ValidationError("frame " + std::to_string(k) + ": timestamps must be strictly increasing");
    }
    std::erase_if(tracks, [&](const auto& entry) { return t - entry.second.last_seen > config.absence_timeout; });

    try {
      const BoundarySet bounds = frame_boundaries(frame, config.boundaries);
      for (const ObjectRecord& object : frame.objects) {
        const GaussianScalar z = object_in_path_coordinates(frame.host, object);
        const double u = object.lateral_velocity.value_or(0.0);

        auto [it, fresh] = tracks.try_emplace(object.id);
        Track& track = it->second;
        track.last_seen = t;

        PathPosterior posterior;
        if (config.method == Method::kDiscrete) {
          const TransitionParams params{config.epsilon, eta_from_lateral_velocity(u, config.eta_gain)};
          track.discrete = step(track.discrete, params, z, bounds);
          posterior = track.discrete;
        } else {
          if (!track.kalman) {
            track.kalman = kf_initialize(z, t);
          } else {
            KalmanState predicted = kf_predict(*track.kalman, u, t - track.kalman->timestamp, noise);
            predicted.timestamp = t;
            track.kalman = kf_update(predicted, z);
          }
          posterior = discretize_posterior(*track.kalman, bounds);
        }
        results.push_back({t, k, object.id, config.method, assign(posterior, config.p_min), posterior,
                           object.ground_truth});
      }
    } catch (const ValidationError&) {
      throw;
    } catch (const std::exception& e) {
      throw InputError("frame " + std::to_string(k) + " (t=" + format_param(t) + "): " + e.what());
    }
  }
  return results;
}

void write_run_csv(std::ostream& os, std::span<const FrameResult> results) {
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << "t,object_id,method,assigned,prob,p0,p1,p2,p3,p4\n" << std::setprecision(10);
  for (const auto& r : results) {
    const int assigned = r.assignment.accepted ? r.assignment.index->value() : -1;
    os << r.timestamp << ',' << r.object_id << ',' << to_string(r.method) << ',' << assigned << ','
       << r.assignment.probability;
    for (double p : r.posterior.probs()) os << ',' << p;
    os << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

RocCounts& RocCounts::operator+=(const RocCounts& other) {
  positives += other.positives;
  negatives += other.negatives;
  true_positives += other.true_positives;
  false_positives += other.false_positives;
  return *this;
}

RocCounts count_host_assignments(std::span<const FrameResult> results) {
  RocCounts c;
  for (const auto& r : results) {
    const bool assigned_host = r.assignment.accepted && r.assignment.index &&
                               r.assignment.index->value() == PathIndex::kHost;
    if (r.ground_truth.value() == PathIndex::kHost) {
      ++c.positives;
      if (assigned_host) ++c.true_positives;
    } else {
      ++c.negatives;
      if (assigned_host) ++c.false_positives;
    }
  }
  return c;
}

RocPoint roc_from_counts(const RocCounts& counts, std::string label) {
  RocPoint p;
  p.parameter_label = std::move(label);
  p.counts = counts;
  p.frames_evaluated = counts.positives + counts.negatives;
  if (counts.positives > 0) {
    p.tp_rate = static_cast<double>(counts.true_positives) / static_cast<double>(counts.positives);
  }
  if (counts.negatives > 0) {
    p.fp_rate = static_cast<double>(counts.false_positives) / static_cast<double>(counts.negatives);
  }
  return p;
}

RocPoint compute_roc(std::span<const FrameResult> results, std::string label) {
  return roc_from_counts(count_host_assignments(results), std::move(label));
}

std::vector<RocPoint> sweep_parameters(std::span<const NamedScenario> scenarios, const PipelineConfig& base,
                                       std::span<const double> grid, unsigned threads) {
  if (grid.empty()) throw InputError("sweep_parameters: empty grid");
  const std::size_t jobs = grid.size() * scenarios.size();
  std::vector<RocCounts> counts(jobs);

  auto run_job = [&](std::size_t job) {
    PipelineConfig config = base;
    const double value = grid[job / scenarios.size()];
    (config.method == Method::kDiscrete ? config.epsilon : config.sigma_nu) = value;
    counts[job] = count_host_assignments(run_pipeline(scenarios[job % scenarios.size()].frames, config));
  };

  unsigned workers = threads ? threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(std::max<std::size_t>(jobs, 1)));
  if (workers == 1) {
    for (std::size_t j = 0; j < jobs; ++j) run_job(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t j = next++; j < jobs; j = next++) run_job(j);
          } catch (...) {
            errors[w] = std::current_exception();
            next = jobs;
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<RocPoint> points;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    RocCounts total;
    for (std::size_t s = 0; s < scenarios.size(); ++s) total += counts[g * scenarios.size() + s];
    points.push_back(roc_from_counts(total, format_param(grid[g])));
  }
  return points;
}

void write_roc_csv(std::ostream& os, std::span<const RocPoint> points) {
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << "param,tp_rate,fp_rate,frames\n" << std::setprecision(10);
  auto rate = [&os](const std::optional<double>& r) {
    if (r) {
      os << *r;
    } else {
      os << "undefined";
    }
  };
  for (const auto& p : points) {
    os << p.parameter_label << ',';
    rate(p.tp_rate);
    os << ',';
    rate(p.fp_rate);
    os << ',' << p.frames_evaluated << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

std::vector<double> default_epsilon_grid() { return {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}; }

std::vector<double> default_sigma_nu_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 10; ++i) grid.push_back(0.04 * i);
  return grid;
}

}  // namespace pathassign
