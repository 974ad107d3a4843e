// Command-line driver: run, sweep, synth, mc-validate.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "pathassign/mc_validate.hpp"
#include "pathassign/pipeline.hpp"
#include "pathassign/scenario.hpp"
#include "pathassign/synthetic.hpp"

namespace {

using namespace pathassign;

constexpr int kExitValidation = 2;

// Writes to the named file, or stdout when the name is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<NamedScenario> suite_by_name(const std::string& name, std::uint64_t seed, double step) {
  if (name == "default") return default_suite(seed, step);
  if (name == "noisy_yaw") return noisy_yaw_suite(seed, step);
  if (name == "adjacent_lane") return adjacent_lane_suite(seed, step);
  throw InputError("unknown suite: " + name);
}

struct CommonFlags {
  std::string method = "continuous";
  double epsilon = 0.01;
  double eta_gain = 0.05;
  double sigma_nu = 0.1;
  double p_min = kDefaultMinAssignProbability;
  std::uint64_t seed = 1;
  double step = 0.05;

  PipelineConfig config() const {
    PipelineConfig c;
    c.method = parse_method(method);
    c.epsilon = epsilon;
    c.eta_gain = eta_gain;
    c.sigma_nu = sigma_nu;
    c.p_min = p_min;
    return c;
  }
};

void add_filter_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--method", f.method, "discrete or continuous")
      ->check(CLI::IsMember({"discrete", "continuous"}))
      ->capture_default_str();
  cmd->add_option("--epsilon", f.epsilon, "neighbor-transition probability (discrete)")->capture_default_str();
  cmd->add_option("--eta-gain", f.eta_gain, "eta per m/s of lateral velocity (discrete)")->capture_default_str();
  cmd->add_option("--sigma-nu", f.sigma_nu, "process noise std in m/s (continuous)")->capture_default_str();
  cmd->add_option("--p-min", f.p_min, "minimum posterior mass to accept an assignment")->capture_default_str();
  cmd->add_option("--seed", f.seed, "seed for generated scenarios")->capture_default_str();
  cmd->add_option("--step", f.step, "frame step of generated scenarios in s")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path assignment filters for objects ahead of a host vehicle"};
  app.require_subcommand(1);

  // run
  CommonFlags run_flags;
  std::string run_input;
  std::string run_output;
  auto* run = app.add_subcommand("run", "Run one filter over a scenario file; per-frame CSV");
  run->add_option("scenario", run_input, "scenario file (JSON lines)")->required();
  run->add_option("-o,--output", run_output, "output CSV (default stdout)");
  add_filter_flags(run, run_flags);

  // sweep
  CommonFlags sweep_flags;
  sweep_flags.eta_gain = 0.0;
  std::vector<std::string> sweep_inputs;
  std::string sweep_suite;
  std::vector<double> sweep_grid;
  std::string sweep_output;
  unsigned sweep_threads = 0;
  auto* sweep = app.add_subcommand("sweep", "ROC point per parameter value; CSV param,tp_rate,fp_rate,frames");
  sweep->add_option("scenarios", sweep_inputs, "scenario files");
  sweep->add_option("--suite", sweep_suite, "generated suite: default, noisy_yaw or adjacent_lane")
      ->check(CLI::IsMember({"default", "noisy_yaw", "adjacent_lane"}));
  sweep->add_option("--grid", sweep_grid,
                    "parameter values (epsilon or sigma_nu); defaults to 1e-1..1e-6 or 0.04..0.4")
      ->delimiter(',');
  sweep->add_option("-o,--output", sweep_output, "output CSV (default stdout)");
  sweep->add_option("--threads", sweep_threads, "worker threads, 0 = all cores");
  add_filter_flags(sweep, sweep_flags);

  // synth
  std::string synth_kind = "straight_follow";
  std::string synth_suite;
  std::string synth_output;
  double synth_duration = 30.0;
  double synth_noise_scale = 1.0;
  std::uint64_t synth_seed = 1;
  double synth_step = 0.05;
  auto* synth = app.add_subcommand("synth", "Generate synthetic scenario files");
  synth->add_option("--kind", synth_kind, "straight_follow, adjacent_lane, target_lane_change, host_curve, noisy_yaw")
      ->capture_default_str();
  synth->add_option("--suite", synth_suite, "write a whole suite (default, noisy_yaw, adjacent_lane) into --output dir")
      ->check(CLI::IsMember({"default", "noisy_yaw", "adjacent_lane"}));
  synth->add_option("--duration", synth_duration, "seconds")->capture_default_str();
  synth->add_option("--noise-scale", synth_noise_scale, "multiplier on the default noise levels")
      ->capture_default_str();
  synth->add_option("--seed", synth_seed)->capture_default_str();
  synth->add_option("--step", synth_step)->capture_default_str();
  synth->add_option("-o,--output", synth_output, "scenario file, or directory with --suite");

  // mc-validate
  std::array<std::size_t, 4> mc_levels{8, 4, 4, 4};
  McGridSpec mc_grid;
  McOptions mc_options;
  std::string mc_output;
  auto* mc = app.add_subcommand("mc-validate", "Hellinger distance of Taylor propagation vs sampling");
  mc->add_option("--x-levels", mc_levels[0])->capture_default_str();
  mc->add_option("--bearing-levels", mc_levels[1])->capture_default_str();
  mc->add_option("--v-levels", mc_levels[2])->capture_default_str();
  mc->add_option("--yaw-levels", mc_levels[3])->capture_default_str();
  mc->add_option("--var-x", mc_grid.var_x)->capture_default_str();
  mc->add_option("--var-y", mc_grid.var_y)->capture_default_str();
  mc->add_option("--var-v", mc_grid.var_v)->capture_default_str();
  mc->add_option("--var-yaw", mc_grid.var_yaw)->capture_default_str();
  mc->add_option("--samples", mc_options.samples_per_point)->capture_default_str();
  mc->add_option("--bins", mc_options.bins)->capture_default_str();
  mc->add_option("--seed", mc_options.seed)->capture_default_str();
  mc->add_option("--threads", mc_options.threads, "worker threads, 0 = all cores");
  mc->add_option("-o,--output", mc_output, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*run) {
      const Scenario frames = load_scenario_file(run_input);
      const auto results = run_pipeline(frames, run_flags.config());
      Output out(run_output);
      write_run_csv(out.stream(), results);
    } else if (*sweep) {
      std::vector<NamedScenario> scenarios;
      for (const auto& path : sweep_inputs) scenarios.push_back({path, load_scenario_file(path)});
      if (!sweep_suite.empty()) {
        auto generated = suite_by_name(sweep_suite, sweep_flags.seed, sweep_flags.step);
        scenarios.insert(scenarios.end(), generated.begin(), generated.end());
      }
      if (scenarios.empty()) throw InputError("sweep: give scenario files or --suite");
      const PipelineConfig config = sweep_flags.config();
      if (sweep_grid.empty()) {
        sweep_grid = config.method == Method::kDiscrete ? default_epsilon_grid() : default_sigma_nu_grid();
      }
      const auto points = sweep_parameters(scenarios, config, sweep_grid, sweep_threads);
      Output out(sweep_output);
      write_roc_csv(out.stream(), points);
    } else if (*synth) {
      if (!synth_suite.empty()) {
        if (synth_output.empty()) throw InputError("synth --suite needs --output <directory>");
        std::filesystem::create_directories(synth_output);
        for (const auto& s : suite_by_name(synth_suite, synth_seed, synth_step)) {
          save_scenario_file((std::filesystem::path(synth_output) / (s.name + ".jsonl")).string(), s.frames);
        }
      } else {
        SyntheticSpec spec;
        spec.kind = parse_scenario_kind(synth_kind);
        spec.duration = synth_duration;
        spec.step = synth_step;
        spec.seed = synth_seed;
        NoiseLevels& n = spec.noise;
        for (double* sigma : {&n.sigma_x, &n.sigma_y, &n.sigma_v, &n.sigma_yaw, &n.sigma_v_lat}) {
          *sigma *= synth_noise_scale;
        }
        Output out(synth_output);
        write_scenario(out.stream(), generate_synthetic(spec));
      }
    } else if (*mc) {
      const McGridSpec levels = McGridSpec::uniform(mc_levels[0], mc_levels[1], mc_levels[2], mc_levels[3]);
      mc_grid.x = levels.x;
      mc_grid.bearing_deg = levels.bearing_deg;
      mc_grid.v = levels.v;
      mc_grid.yaw_rate = levels.yaw_rate;
      const auto points = mc_grid.expand();
      const auto results = mc_validate(points, mc_options);
      Output out(mc_output);
      write_mc_csv(out.stream(), results);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
