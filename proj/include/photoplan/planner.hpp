#ifndef PHOTOPLAN_PLANNER_HPP
#define PHOTOPLAN_PLANNER_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "photoplan/occupancy.hpp"
#include "photoplan/rng.hpp"

namespace photoplan {

struct Path {
  std::vector<Vec> waypoints;  ///< first = start, last = goal
  double length = 0.0;

  bool empty() const { return waypoints.empty(); }
};

struct PlanningError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raw grid search result: the cell chain plus exact step-count bookkeeping,
/// so path lengths can be compared as (straight + diagonal*sqrt(2)) without
/// floating-point ambiguity.
struct GridSearchResult {
  std::vector<std::array<int, 3>> cells;
  int straight_steps = 0;
  int diagonal_steps = 0;
  bool found = false;
};

/// Per-cell route-existence flags (1 = a path from `start` can end there).
/// Uses the same endpoint snapping and moves as the grid planner in 2D and a
/// conservative face-connected flood in 3D, so a cell flagged 0 is one the
/// planner would reject. All zeros when the start has no free cell nearby.
std::vector<char> reachable_cells(const NavMask& mask, const Vec& start);

/// 8-connected A* over mask-free cells. Diagonal moves are allowed only when
/// both adjacent orthogonal cells are also free, so the swept segment never
/// clips a blocked cell corner. 2D only.
GridSearchResult astar_search(const NavMask& mask,
                              const std::array<int, 3>& start_cell,
                              const std::array<int, 3>& goal_cell);

/// Full 2D planning pipeline: snap endpoints to free cells, A*, then greedy
/// line-of-sight shortcutting, with the exact start/goal spliced back in.
/// Throws PlanningError when no route exists.
Path plan_grid_astar(const NavMask& mask, const Vec& start, const Vec& goal);

/// Sampling-based planner for 3D workspaces (works in 2D as well). Rewires
/// within a shrinking radius so the returned route improves with iteration
/// count. Throws PlanningError when no connection is found in the budget.
Path plan_rrt_star(const NavMask& mask, const Vec& start, const Vec& goal,
                   int iterations, Rng& rng);

/// True when every segment of the path still crosses only mask-free cells.
bool path_clear(const NavMask& mask, const Path& path);

}  // namespace photoplan

#endif  // PHOTOPLAN_PLANNER_HPP
