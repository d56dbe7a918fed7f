#ifndef PHOTOPLAN_OCCUPANCY_HPP
#define PHOTOPLAN_OCCUPANCY_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "photoplan/geometry.hpp"
#include "photoplan/workspace.hpp"

namespace photoplan {

/// Log-odds occupancy probability: p = 1 / (1 + e^{-l}).
inline double occupancy_probability(double logodds) {
  return 1.0 / (1.0 + std::exp(-logodds));
}

struct OccupancyParams {
  double l_hit = 0.85;
  double l_miss = -0.4;
  double l_min = -2.0;
  double l_max = 3.5;
  double occupied_threshold = 0.5;  ///< probability above which a cell blocks
};

/// Recursive log-odds occupancy grid over a Workspace. Cells start at
/// log-odds 0 (probability 0.5, unknown); unknown cells are traversable for
/// planning. Updates are clamped so no cell saturates irrecoverably.
class OccupancyGrid {
 public:
  OccupancyGrid() = default;
  OccupancyGrid(const Workspace& ws, const OccupancyParams& params = {})
      : ws_(ws), params_(params), logodds_(ws.cell_count(), 0.0) {}

  const Workspace& workspace() const { return ws_; }
  const OccupancyParams& params() const { return params_; }

  double logodds(std::size_t idx) const { return logodds_.at(idx); }
  double probability(std::size_t idx) const {
    return occupancy_probability(logodds_.at(idx));
  }
  bool occupied(std::size_t idx) const {
    return probability(idx) > params_.occupied_threshold;
  }

  void add_hit(std::size_t idx) { bump(idx, params_.l_hit); }
  void add_miss(std::size_t idx) { bump(idx, params_.l_miss); }
  void set_logodds(std::size_t idx, double value) {
    logodds_.at(idx) = clamp(value);
  }

  const std::vector<double>& raw() const { return logodds_; }

  /// Centers of all occupied cells, in linear-index order. These are the
  /// occluder spheres candidate evaluation casts against.
  std::vector<Vec> occupied_centers() const {
    std::vector<Vec> out;
    for (int z = 0; z < ws_.shape[2]; ++z) {
      for (int y = 0; y < ws_.shape[1]; ++y) {
        for (int x = 0; x < ws_.shape[0]; ++x) {
          std::array<int, 3> c = {x, y, z};
          if (occupied(ws_.linear_index(c))) {
            out.push_back(ws_.cell_center(c));
          }
        }
      }
    }
    return out;
  }

 private:
  double clamp(double v) const {
    if (v < params_.l_min) return params_.l_min;
    if (v > params_.l_max) return params_.l_max;
    return v;
  }
  void bump(std::size_t idx, double delta) {
    logodds_.at(idx) = clamp(logodds_.at(idx) + delta);
  }

  Workspace ws_;
  OccupancyParams params_;
  std::vector<double> logodds_;
};

/// True iff any occupied cell center lies within `inflation` of `position`.
/// Position must be inside the workspace.
bool is_colliding(const OccupancyGrid& grid, const Vec& position,
                  double inflation);

/// Visits every grid cell along the segment a -> b in order (Amanatides-Woo
/// traversal). The visitor receives the cell index triple and returns false
/// to stop early. Endpoints must lie inside the workspace.
template <typename Visitor>
void walk_cells(const Workspace& ws, const Vec& a, const Vec& b,
                Visitor&& visit) {
  const Vec d = b - a;
  const double len = d.norm();
  std::array<int, 3> cell = ws.cell_of(a);
  const std::array<int, 3> goal = ws.cell_of(b);
  if (len < 1e-12) {
    visit(cell);
    return;
  }
  const Vec u = d / len;

  std::array<int, 3> step = {0, 0, 0};
  std::array<double, 3> t_max = {1e300, 1e300, 1e300};
  std::array<double, 3> t_delta = {1e300, 1e300, 1e300};
  for (int axis = 0; axis < ws.dims; ++axis) {
    if (std::abs(u[axis]) < 1e-15) continue;
    step[axis] = u[axis] > 0.0 ? 1 : -1;
    const double edge =
        ws.lower[axis] +
        (cell[axis] + (step[axis] > 0 ? 1 : 0)) * ws.resolution;
    t_max[axis] = (edge - a[axis]) / u[axis];
    t_delta[axis] = ws.resolution / std::abs(u[axis]);
  }

  // Worst-case cell count along any segment, plus slack for boundary jitter.
  int budget = 2 * (ws.shape[0] + ws.shape[1] + ws.shape[2]) + 8;
  while (budget-- > 0) {
    if (!visit(cell)) return;
    if (cell == goal) return;
    int axis = 0;
    if (t_max[1] < t_max[axis]) axis = 1;
    if (t_max[2] < t_max[axis]) axis = 2;
    if (t_max[axis] > len) return;  // remaining boundary lies past b
    cell[axis] += step[axis];
    if (cell[axis] < 0 || cell[axis] >= ws.shape[axis]) return;
    t_max[axis] += t_delta[axis];
  }
}

/// Conservative blocked-cell mask used by planning and feasibility checks:
/// occupied cells (and statically blocked ones, e.g. the target body)
/// dilated by inflation plus half a cell diagonal. A mask-free cell
/// guarantees every point inside it keeps >= inflation clearance from all
/// occupied cell centers, so segment checks reduce to walking cells.
class NavMask {
 public:
  NavMask() = default;

  /// `extra_blocked` are linear indices treated as occupied regardless of
  /// the grid belief (target body cells).
  NavMask(const OccupancyGrid& grid, double inflation,
          const std::vector<std::size_t>& extra_blocked = {});

  const Workspace& workspace() const { return ws_; }
  double inflation() const { return inflation_; }

  bool blocked_cell(const std::array<int, 3>& c) const {
    return blocked_[ws_.linear_index(c)] != 0;
  }
  bool blocked(const Vec& p) const {
    if (!ws_.contains(p)) return true;
    return blocked_cell(ws_.cell_of(p));
  }

  /// True iff every cell touched by segment a -> b is mask free.
  bool segment_clear(const Vec& a, const Vec& b) const {
    if (!ws_.contains(a) || !ws_.contains(b)) return false;
    bool clear = true;
    walk_cells(ws_, a, b, [&](const std::array<int, 3>& c) {
      if (blocked_cell(c)) {
        clear = false;
        return false;
      }
      return true;
    });
    return clear;
  }

 private:
  Workspace ws_;
  double inflation_ = 0.0;
  std::vector<std::uint8_t> blocked_;
};

}  // namespace photoplan

#endif  // PHOTOPLAN_OCCUPANCY_HPP
