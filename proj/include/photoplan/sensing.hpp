#ifndef PHOTOPLAN_SENSING_HPP
#define PHOTOPLAN_SENSING_HPP

#include <span>
#include <vector>

#include "photoplan/occupancy.hpp"
#include "photoplan/raycast.hpp"
#include "photoplan/scenario.hpp"
#include "photoplan/target.hpp"

namespace photoplan {

/// Casts a sensor sweep against the true world (obstacle surface spheres +
/// the target body). Throws std::domain_error if the pose origin is outside
/// the workspace. Target spheres double as the occluder set so nothing can
/// be seen "through" the building, and target returns are distinguishable
/// from obstacle returns downstream.
std::vector<RaycastHit> simulate_depth_sensor(
    const Workspace& ws, const Pose& pose, const SensorParams& sensor,
    std::span<const Vec> obstacle_samples, const TargetModel& target,
    double radius);

/// Folds one scan into the believed map: every traversed cell gets a miss
/// update except the final cell of an obstacle return, which gets a hit.
/// Target and max-range terminals never mark occupancy. Rays are clipped to
/// the grid.
void integrate_depth_scan(OccupancyGrid& grid, const Vec& origin,
                          const std::vector<RaycastHit>& hits);

}  // namespace photoplan

#endif  // PHOTOPLAN_SENSING_HPP
