// Command-line front end: mission runs, ground-truth heatmaps, validation
// suites, and kernel hyperparameter tuning.

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "photoplan/cli_ops.hpp"

int main(int argc, char** argv) {
  CLI::App app{"next-best-view photography planner"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads,
                 "worker threads for parallel kernels (0 = library default)");

  photoplan::RunOptions run_opts;
  std::uint64_t seed_override = 0;
  auto* run = app.add_subcommand("run", "simulate a full capture mission");
  run->add_option("scenario", run_opts.scenario_path, "scenario file")
      ->required();
  auto* seed_opt =
      run->add_option("--seed", seed_override, "override the scenario seed");
  run->add_option("--out", run_opts.out_dir, "output directory root")
      ->capture_default_str();

  photoplan::HeatmapOptions heat_opts;
  auto* heatmap =
      app.add_subcommand("heatmap", "exhaustive viewpoint score table");
  heatmap->add_option("scenario", heat_opts.scenario_path, "scenario file")
      ->required();
  heatmap->add_option("--step", heat_opts.step, "lattice spacing in meters")
      ->capture_default_str();
  heatmap->add_option("--out", heat_opts.out_file, "output CSV path")
      ->capture_default_str();

  std::string suite = "all";
  auto* validate =
      app.add_subcommand("validate", "run a validation suite");
  validate->add_option("suite", suite,
                       "utility | raycast | gp | pso-error | all")
      ->capture_default_str();

  photoplan::TuneGpOptions tune_opts;
  auto* tune =
      app.add_subcommand("tune-gp", "kernel hyperparameter grid search");
  tune->add_option("scenario", tune_opts.scenario_path, "scenario file")
      ->required();
  tune->add_option("--out", tune_opts.out_file, "write the NLL table here");

  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  if (run->parsed()) {
    if (seed_opt->count() > 0) run_opts.seed = seed_override;
    return photoplan::cmd_run(run_opts);
  }
  if (heatmap->parsed()) return photoplan::cmd_heatmap(heat_opts);
  if (validate->parsed()) return photoplan::cmd_validate(suite);
  if (tune->parsed()) return photoplan::cmd_tune_gp(tune_opts);
  return photoplan::kExitBadInput;
}
