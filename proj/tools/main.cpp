#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "obslab/csv_io.hpp"
#include "obslab/simulate.hpp"
#include "obslab/version.hpp"

namespace {

struct Overrides {
  std::optional<double> step;
  std::optional<double> duration;
  std::optional<std::uint64_t> seed;
};

void apply(obslab::ScenarioConfig& cfg, const Overrides& ov) {
  if (ov.step) {
    // keep the sample grid aligned when only the substep changes
    if (cfg.integrator.sample_period == cfg.integrator.step)
      cfg.integrator.sample_period = *ov.step;
    cfg.integrator.step = *ov.step;
  }
  if (ov.duration) cfg.integrator.duration = *ov.duration;
  if (ov.seed) {
    cfg.seed = *ov.seed;
    if (cfg.noise.kind == obslab::NoiseKind::gaussian) cfg.noise.seed = *ov.seed;
  }
  cfg.validate();
}

int execute(const obslab::ScenarioConfig& cfg, const std::string& out_dir) {
  const obslab::RunResult result = obslab::run_scenario(cfg);
  obslab::write_outputs(result.trace, result.report, cfg, out_dir);
  std::printf("%s: %zu samples", cfg.name.c_str(), result.trace.size());
  if (result.report.diverged)
    std::printf(", DIVERGED at t=%.6g s", result.report.divergence_time);
  if (result.report.excitation)
    std::printf(", excitation %s", result.report.excitation->verdict().c_str());
  std::printf(" -> %s\n", out_dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adaptive/sliding-mode observer simulation lab"};
  app.set_version_flag("--version", std::string("obslab ") + obslab::kVersion);

  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads for the analysis kernels (0 = default)");

  Overrides ov;
  std::string config_path, out_dir = "out", preset_name, trace_path;

  CLI::App* run = app.add_subcommand("run", "run a scenario config file");
  run->add_option("config", config_path, "scenario config (JSON)")->required();
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--step", ov.step, "override integrator step (s)");
  run->add_option("--duration", ov.duration, "override duration (s)");
  run->add_option("--seed", ov.seed, "override run seed");

  CLI::App* preset = app.add_subcommand("preset", "canned scenarios");
  CLI::App* preset_list_cmd = preset->add_subcommand("list", "list preset names");
  CLI::App* preset_run = preset->add_subcommand("run", "run a preset by name");
  preset_run->add_option("name", preset_name, "preset name")->required();
  preset_run->add_option("--out", out_dir, "output directory");
  preset_run->add_option("--step", ov.step, "override integrator step (s)");
  preset_run->add_option("--duration", ov.duration, "override duration (s)");
  preset_run->add_option("--seed", ov.seed, "override run seed");

  CLI::App* metrics = app.add_subcommand("metrics", "recompute metrics from a stored trace");
  metrics->add_option("trace", trace_path, "trace.csv produced by a run")->required();
  std::string metrics_out;
  metrics->add_option("--out", metrics_out, "write metrics.csv here instead of stdout");

  app.require_subcommand(1);
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (*run) {
      obslab::ScenarioConfig cfg = obslab::load_scenario(config_path);
      apply(cfg, ov);
      return execute(cfg, out_dir);
    }
    if (*preset_list_cmd) {
      for (const auto& p : obslab::preset_list())
        std::printf("%-22s %s\n", p.name.c_str(), p.description.c_str());
      return 0;
    }
    if (*preset_run) {
      obslab::ScenarioConfig cfg = obslab::preset_scenario(preset_name);
      apply(cfg, ov);
      return execute(cfg, out_dir);
    }
    if (*metrics) {
      const obslab::Trace trace = obslab::read_trace_csv(trace_path);
      const obslab::MetricReport report = obslab::compute_metrics(trace);
      if (metrics_out.empty()) {
        for (const auto& c : report.channels)
          std::printf("%s: rmse=%.9g final_mean=%.9g final_rmse=%.9g chattering=%.9g\n",
                      c.channel.c_str(), c.rmse_vs_zero, c.final_mean, c.final_rmse,
                      c.chattering);
      } else {
        obslab::write_metrics_csv(report, metrics_out);
        std::printf("metrics -> %s\n", metrics_out.c_str());
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
