#ifndef PHOTOPLAN_RAYCAST_HPP
#define PHOTOPLAN_RAYCAST_HPP

#include <span>
#include <vector>

#include "photoplan/geometry.hpp"

namespace photoplan {

/// Fan (2D) or azimuth x elevation grid (3D) of unit ray directions. The
/// generating angles are kept per ray; the view metric consumes them
/// directly instead of re-deriving angles from directions.
struct RayBundle {
  std::vector<Vec> dirs;
  std::vector<double> azimuth;    ///< horizontal angle from the optical axis
  std::vector<double> elevation;  ///< vertical angle, all 0 in 2D
  double fov_h = 0.0;
  double fov_v = 0.0;
};

/// What a ray terminated on. Occluders are solid geometry that is known a
/// priori but not part of the photographed surface (e.g. faces of the
/// target body excluded from the coverage set); they block rays like
/// obstacles but are never mapped as occupied.
enum class HitKind { kNone = 0, kObstacle, kOccluder, kTarget };

struct RaycastHit {
  Vec terminal = Vec::Zero();  ///< x_s: intersection point or max-range point
  double distance = 0.0;       ///< distance from the ray origin to terminal
  HitKind kind = HitKind::kNone;
  int target_index = -1;  ///< index into the target coordinate list
  int ray_index = 0;
};

/// Uniform angular grid spanning [-fov/2, +fov/2] inclusive on each active
/// axis, rotated into the pose frame. n_v is ignored (forced to 1, elevation
/// 0) when dims == 2. A count of 1 degenerates to the axis angle 0.
/// FOVs must lie in (0, pi].
RayBundle generate_ray_bundle(const Pose& pose, double fov_h, double fov_v,
                              int n_h, int n_v, int dims);

/// Casts one ray of length d_max against three sphere sets of common radius
/// `radius`, keeping the nearest chord-entry intersection. Ties are broken
/// by lowest index in the concatenated order obstacles, occluders, targets.
/// Misses terminate at origin + d_max * dir.
RaycastHit cast_ray(const Vec& origin, const Vec& dir, double d_max,
                    std::span<const Vec> obstacles,
                    std::span<const Vec> occluders,
                    std::span<const Vec> targets, double radius);

/// Casts every ray of a bundle from pose.position. Rays are independent, so
/// the parallel kernel writes one result slot per ray and is bit-identical
/// to cast_bundle_serial at any thread count.
std::vector<RaycastHit> cast_bundle(const Pose& pose, const RayBundle& bundle,
                                    std::span<const Vec> obstacles,
                                    std::span<const Vec> occluders,
                                    std::span<const Vec> targets,
                                    double d_max, double radius);

/// Serial reference implementation of cast_bundle, kept for testing and for
/// the kernel benchmark.
std::vector<RaycastHit> cast_bundle_serial(
    const Pose& pose, const RayBundle& bundle, std::span<const Vec> obstacles,
    std::span<const Vec> occluders, std::span<const Vec> targets, double d_max,
    double radius);

}  // namespace photoplan

#endif  // PHOTOPLAN_RAYCAST_HPP
