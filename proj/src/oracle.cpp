#include "photoplan/oracle.hpp"

#include <cmath>

#include "photoplan/metric.hpp"
#include "photoplan/raycast.hpp"

namespace photoplan {
namespace {

std::array<int, 3> lattice_shape(const Workspace& ws, double step) {
  std::array<int, 3> shape{1, 1, 1};
  for (int a = 0; a < ws.dims; ++a) {
    shape[a] =
        static_cast<int>(std::floor((ws.upper[a] - ws.lower[a]) / step + 1e-9)) +
        1;
  }
  return shape;
}

Heatmap compute_impl(const Scenario& scenario, const CoverageField& field,
                     double step, bool parallel) {
  if (step <= 0) throw std::invalid_argument("heatmap step must be positive");
  const Workspace& ws = scenario.ws;
  TargetModel target = scenario.make_target();
  if (field.mu.size() != static_cast<Eigen::Index>(target.coords().size())) {
    throw std::invalid_argument("coverage field size does not match target");
  }

  // Fully known world: obstacle spheres from the true boxes and a mask built
  // from the saturated occupancy raster plus the target body.
  std::vector<Vec> obstacles = scenario.true_obstacle_samples();
  OccupancyGrid true_grid = scenario.true_occupancy();
  NavMask mask(true_grid, scenario.mission.inflation,
               target.body_cells(ws));

  Heatmap map;
  map.step = step;
  map.lattice_shape = lattice_shape(ws, step);
  const int nx = map.lattice_shape[0];
  const int ny = map.lattice_shape[1];
  const int nz = map.lattice_shape[2];
  const std::size_t total =
      static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
      static_cast<std::size_t>(nz);
  map.cells.resize(total);

  const Vec aim = target.interest_centroid(field.mu);
  const CameraParams& cam = scenario.camera;
  const std::size_t n_spheres = target.coords().size();

  auto score_cell = [&](std::size_t flat) {
    HeatmapCell& cell = map.cells[flat];
    int ix = static_cast<int>(flat % static_cast<std::size_t>(nx));
    int iy = static_cast<int>((flat / static_cast<std::size_t>(nx)) %
                              static_cast<std::size_t>(ny));
    int iz = static_cast<int>(flat / (static_cast<std::size_t>(nx) *
                                      static_cast<std::size_t>(ny)));
    Vec p = ws.lower;
    p[0] += ix * step;
    p[1] += iy * step;
    if (ws.dims == 3) p[2] += iz * step;
    cell.position = p;

    if (!ws.contains(p) || mask.blocked(p)) return;
    cell.feasible = true;

    Pose pose = Pose::look_at(p, aim, ws.dims);
    RayBundle bundle =
        generate_ray_bundle(pose, cam.fov_h, cam.fov_v, cam.capture_rays_h,
                            cam.capture_rays_v, ws.dims);
    std::vector<RaycastHit> hits = cast_bundle_serial(
        pose, bundle, obstacles, target.occluder_coords(), target.coords(),
        scenario.sensor.range, scenario.sphere_radius);

    std::vector<char> visible(n_spheres, 0);
    bool any = false;
    for (const RaycastHit& h : hits) {
      if (h.kind == HitKind::kTarget) {
        visible[static_cast<std::size_t>(h.target_index)] = 1;
        any = true;
      }
    }
    if (!any) return;  // zero score, still feasible

    double gain = 0.0;
    for (std::size_t j = 0; j < n_spheres; ++j) {
      if (visible[j]) gain += std::max(0.0, 1.0 - field.mu[static_cast<Eigen::Index>(j)]);
    }
    cell.gamma_d = distortion_factor(pose, hits, cam.distortion, ws.dims);
    cell.gamma_s = scale_factor(bundle, hits, cam.scale, ws.dims);
    cell.gain = gain;
    cell.score = cell.gamma_d * cell.gamma_s * gain;
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long long flat = 0; flat < static_cast<long long>(total); ++flat) {
      score_cell(static_cast<std::size_t>(flat));
    }
  } else {
    for (std::size_t flat = 0; flat < total; ++flat) score_cell(flat);
  }

  double best = -1.0;
  for (std::size_t flat = 0; flat < total; ++flat) {
    const HeatmapCell& cell = map.cells[flat];
    if (cell.feasible && cell.score > best) {
      best = cell.score;
      map.best_index = static_cast<int>(flat);
    }
  }
  return map;
}

}  // namespace

std::optional<double> march_ray(const Vec& origin, const Vec& dir,
                                double d_max, std::span<const Vec> spheres,
                                double radius, double step) {
  if (step <= 0 || d_max <= 0 || radius <= 0) {
    throw std::invalid_argument("march_ray needs positive step/d_max/radius");
  }
  Vec u = dir.normalized();
  // t = k*step (not accumulated) so long marches carry no rounding drift.
  const long long n_steps = static_cast<long long>(std::floor(d_max / step));
  for (long long k = 0; k <= n_steps; ++k) {
    double t = static_cast<double>(k) * step;
    Vec p = origin + t * u;
    for (const Vec& c : spheres) {
      if ((p - c).norm() < radius) return t;
    }
  }
  return std::nullopt;
}

Heatmap compute_heatmap(const Scenario& scenario, const CoverageField& field,
                        double step) {
  return compute_impl(scenario, field, step, true);
}

Heatmap compute_heatmap_serial(const Scenario& scenario,
                               const CoverageField& field, double step) {
  return compute_impl(scenario, field, step, false);
}

}  // namespace photoplan
