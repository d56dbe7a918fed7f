#include "photoplan/sensing.hpp"

#include <stdexcept>

namespace photoplan {

std::vector<RaycastHit> simulate_depth_sensor(
    const Workspace& ws, const Pose& pose, const SensorParams& sensor,
    std::span<const Vec> obstacle_samples, const TargetModel& target,
    double radius) {
  if (!ws.contains(pose.position)) {
    throw std::domain_error("depth sensor pose outside workspace");
  }
  RayBundle bundle = generate_ray_bundle(pose, sensor.fov_h, sensor.fov_v,
                                         sensor.rays_h, sensor.rays_v,
                                         ws.dims);
  // The target's own surface occludes like any solid: active-face spheres
  // are cast as targets, the rest as occluders.
  return cast_bundle(pose, bundle, obstacle_samples,
                     target.occluder_coords(), target.coords(), sensor.range,
                     radius);
}

void integrate_depth_scan(OccupancyGrid& grid, const Vec& origin,
                          const std::vector<RaycastHit>& hits) {
  const Workspace& ws = grid.workspace();
  if (!ws.contains(origin)) {
    throw std::domain_error("scan origin outside workspace");
  }
  for (const RaycastHit& hit : hits) {
    Vec end = hit.terminal;
    bool marks_hit = hit.kind == HitKind::kObstacle;
    if (!ws.contains(end)) {
      // Clip the free-space segment to the grid; the out-of-bounds terminal
      // cannot be marked either way.
      Vec d = end - origin;
      double len = d.norm();
      if (len < 1e-12) continue;
      Vec u = d / len;
      double t_exit = len;
      for (int a = 0; a < ws.dims; ++a) {
        if (std::abs(u[a]) < 1e-15) continue;
        double t1 = (ws.lower[a] - origin[a]) / u[a];
        double t2 = (ws.upper[a] - origin[a]) / u[a];
        t_exit = std::min(t_exit, std::max(t1, t2));
      }
      if (t_exit <= 0) continue;
      end = origin + (t_exit - 1e-9) * u;
      if (!ws.contains(end)) continue;
      marks_hit = false;
    }
    const std::array<int, 3> final_cell = ws.cell_of(end);
    walk_cells(ws, origin, end, [&](const std::array<int, 3>& cell) {
      if (cell == final_cell) return true;  // handled after the walk
      grid.add_miss(ws.linear_index(cell));
      return true;
    });
    if (marks_hit) {
      grid.add_hit(ws.linear_index(final_cell));
    } else if (hit.kind == HitKind::kNone) {
      grid.add_miss(ws.linear_index(final_cell));
    }
    // Target / occluder terminals: leave the final cell untouched so the
    // believed map never blocks the structure being photographed.
  }
}

}  // namespace photoplan
