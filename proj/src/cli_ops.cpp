#include "photoplan/cli_ops.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "photoplan/coverage_ops.hpp"
#include "photoplan/io.hpp"
#include "photoplan/log.hpp"
#include "photoplan/mission.hpp"
#include "photoplan/oracle.hpp"
#include "photoplan/validation.hpp"

namespace photoplan {
namespace {

Scenario load_or_fail(const std::string& path) {
  // Propagates ScenarioParseError (with line diagnostics) to the caller.
  return load_scenario(path);
}

}  // namespace

int cmd_run(const RunOptions& opts) {
  Scenario scenario;
  try {
    scenario = load_or_fail(opts.scenario_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  }
  if (opts.seed) scenario.seed = *opts.seed;

  MissionLog log;
  try {
    log = run_mission(scenario);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: mission failed: %s\n", e.what());
    return kExitFailure;
  }

  const std::string dir =
      (std::filesystem::path(opts.out_dir) / scenario.name).string();
  write_mission_outputs(log, dir);

  double mean_ms = 0.0;
  if (!log.eval_ms.empty()) {
    mean_ms = std::accumulate(log.eval_ms.begin(), log.eval_ms.end(), 0.0) /
              static_cast<double>(log.eval_ms.size());
  }
  std::printf("scenario %s (seed %llu): %zu photos, coverage %.4f, "
              "%d ticks, termination %s\n",
              log.scenario_name.c_str(),
              static_cast<unsigned long long>(log.seed), log.photos.size(),
              log.coverage_curve.empty() ? 0.0 : log.coverage_curve.back(),
              log.ticks, log.termination.c_str());
  std::printf("candidate evaluations %zu, mean %.3f ms; outputs in %s\n",
              log.eval_ms.size(), mean_ms, dir.c_str());
  return log.aborted ? kExitFailure : kExitOk;
}

int cmd_heatmap(const HeatmapOptions& opts) {
  if (opts.step <= 0.0) {
    std::fprintf(stderr, "error: --step must be positive\n");
    return kExitBadInput;
  }
  Scenario scenario;
  try {
    scenario = load_or_fail(opts.scenario_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  }

  TargetModel target = scenario.make_target();
  CoverageField field(static_cast<int>(target.coords().size()));
  Heatmap map = compute_heatmap(scenario, field, opts.step);
  write_heatmap_csv(map, scenario.ws.dims, opts.out_file);

  if (map.best_index < 0) {
    std::printf("heatmap: no feasible cell\n");
    return kExitFailure;
  }
  const HeatmapCell& best = map.best();
  if (scenario.ws.dims == 3) {
    std::printf("argmax (%s, %s, %s) score %s -> %s\n",
                format_number(best.position.x()).c_str(),
                format_number(best.position.y()).c_str(),
                format_number(best.position.z()).c_str(),
                format_number(best.score).c_str(), opts.out_file.c_str());
  } else {
    std::printf("argmax (%s, %s) score %s -> %s\n",
                format_number(best.position.x()).c_str(),
                format_number(best.position.y()).c_str(),
                format_number(best.score).c_str(), opts.out_file.c_str());
  }
  return kExitOk;
}

int cmd_validate(const std::string& suite) {
  std::vector<SuiteResult> results;
  try {
    results = run_validation(suite);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  }
  bool all_pass = true;
  for (const auto& res : results) {
    for (const auto& check : res.checks) {
      std::printf("[%s] %s: %s (%s)\n", check.pass ? "PASS" : "FAIL",
                  res.suite.c_str(), check.name.c_str(),
                  check.detail.c_str());
      all_pass = all_pass && check.pass;
    }
  }
  return all_pass ? kExitOk : kExitFailure;
}

int cmd_tune_gp(const TuneGpOptions& opts) {
  Scenario scenario;
  try {
    scenario = load_or_fail(opts.scenario_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitBadInput;
  }

  TargetModel target = scenario.make_target();
  CoverageField field(static_cast<int>(target.coords().size()));
  std::vector<Vec> obstacles = scenario.true_obstacle_samples();

  // Training data: dense captures from a ring of poses around the target.
  const Vec centroid = target.interest_centroid(field.mu);
  const double ring = std::min(0.7 * scenario.sensor.range, 20.0);
  std::vector<Vec> xs;
  std::vector<double> ys;
  for (int k = 0; k < 4; ++k) {
    const double angle = 2.0 * 3.14159265358979323846 * k / 4.0;
    Vec p = centroid;
    p.x() += ring * std::cos(angle);
    p.y() += ring * std::sin(angle);
    if (!scenario.ws.contains(p)) continue;
    Pose pose = Pose::look_at(p, centroid, scenario.ws.dims);
    RayBundle bundle = generate_ray_bundle(
        pose, scenario.camera.fov_h, scenario.camera.fov_v,
        scenario.camera.eval_rays_h, scenario.camera.eval_rays_v,
        scenario.ws.dims);
    auto hits = cast_bundle(pose, bundle, obstacles,
                            target.occluder_coords(), target.coords(),
                            scenario.sensor.range, scenario.sphere_radius);
    for (const auto& s : collect_samples(hits, target, field, scenario.gp)) {
      xs.push_back(s.x);
      ys.push_back(s.y);
    }
  }
  if (xs.size() > 600) {
    // Keep the NLL solves quick; stride keeps pose balance.
    std::vector<Vec> x2;
    std::vector<double> y2;
    for (int i : stride_subsample(static_cast<int>(xs.size()), 600)) {
      x2.push_back(xs[static_cast<std::size_t>(i)]);
      y2.push_back(ys[static_cast<std::size_t>(i)]);
    }
    xs.swap(x2);
    ys.swap(y2);
  }
  if (xs.empty()) {
    std::fprintf(stderr, "error: no target returns to tune on\n");
    return kExitFailure;
  }

  const double spacing = scenario.target_spacing;
  const std::vector<double> sf_grid = {0.5, 1.0, 1.5, 2.0};
  const std::vector<double> sl_grid = {0.5 * spacing, spacing, 2.0 * spacing,
                                       3.0 * spacing, 4.0 * spacing};
  Eigen::VectorXd y(static_cast<Eigen::Index>(ys.size()));
  for (std::size_t i = 0; i < ys.size(); ++i) {
    y[static_cast<Eigen::Index>(i)] = ys[i];
  }
  TuneResult tuned =
      tune_hyperparameters(xs, y, scenario.gp.sigma_n, sf_grid, sl_grid);

  std::printf("sigma_f,sigma_l,nll\n");
  for (const auto& row : tuned.table) {
    std::printf("%s,%s,%s\n", format_number(row[0]).c_str(),
                format_number(row[1]).c_str(),
                format_number(row[2]).c_str());
  }
  std::printf("best sigma_f %s sigma_l %s (nll %s) over %zu samples\n",
              format_number(tuned.model.sigma_f).c_str(),
              format_number(tuned.model.sigma_l).c_str(),
              format_number(tuned.nll).c_str(), xs.size());

  if (!opts.out_file.empty()) {
    std::ofstream out(opts.out_file, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "error: cannot write %s\n", opts.out_file.c_str());
      return kExitFailure;
    }
    out << "sigma_f,sigma_l,nll\n";
    for (const auto& row : tuned.table) {
      out << format_number(row[0]) << ',' << format_number(row[1]) << ','
          << format_number(row[2]) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace photoplan
