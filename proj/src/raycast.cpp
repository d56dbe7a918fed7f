#include "photoplan/raycast.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace photoplan {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_cast_args(double d_max, double radius) {
  if (d_max <= 0.0) {
    throw std::invalid_argument("cast_ray: d_max must be positive");
  }
  if (radius <= 0.0) {
    throw std::invalid_argument("cast_ray: sphere radius must be positive");
  }
}

void check_fov(double fov, const char* name) {
  if (!(fov > 0.0) || fov > kPi) {
    throw std::invalid_argument(std::string(name) +
                                ": field of view must lie in (0, pi]");
  }
}

/// Angles spanning [-fov/2, +fov/2] inclusive; a single ray sits on the axis.
std::vector<double> angle_grid(double fov, int count) {
  std::vector<double> angles(count);
  if (count == 1) {
    angles[0] = 0.0;
    return angles;
  }
  const double step = fov / (count - 1);
  for (int i = 0; i < count; ++i) {
    angles[i] = -0.5 * fov + i * step;
  }
  return angles;
}

/// Nearest chord-entry intersection of the ray with one sphere set.
/// `base` offsets indices into the concatenated sphere ordering so that the
/// lowest-index sphere wins exact distance ties across sets.
struct NearestState {
  double best = 0.0;   // current terminal distance
  double param = 0.0;  // signed ray parameter of the winning point
  int winner = -1;     // concatenated sphere index, -1 = miss
};

void scan_spheres(const Vec& origin, const Vec& dir, double radius,
                  std::span<const Vec> spheres, int base,
                  NearestState& state) {
  const double r2 = radius * radius;
  for (std::size_t i = 0; i < spheres.size(); ++i) {
    const Vec to_center = spheres[i] - origin;
    const double d_z = to_center.dot(dir);
    if (d_z <= 0.0) continue;  // center behind or beside the origin
    const double d_center2 = (to_center - d_z * dir).squaredNorm();
    if (d_center2 >= r2) continue;
    const double d_chord = std::sqrt(r2 - d_center2);
    // Chord endpoints sit at parameters d_z -+ d_chord; the one nearer the
    // origin (by absolute distance) is the entry point.
    const double t = d_z - d_chord;
    const double d_intersect = std::abs(t);
    if (d_intersect < state.best) {
      state.best = d_intersect;
      state.param = t;
      state.winner = base + static_cast<int>(i);
    }
  }
}

}  // namespace

RayBundle generate_ray_bundle(const Pose& pose, double fov_h, double fov_v,
                              int n_h, int n_v, int dims) {
  check_fov(fov_h, "generate_ray_bundle");
  if (dims == 3) check_fov(fov_v, "generate_ray_bundle");
  if (n_h < 1 || n_v < 1) {
    throw std::invalid_argument("generate_ray_bundle: ray counts must be >= 1");
  }
  if (dims == 2) n_v = 1;

  RayBundle bundle;
  bundle.fov_h = fov_h;
  bundle.fov_v = dims == 3 ? fov_v : 0.0;
  const std::vector<double> az = angle_grid(fov_h, n_h);
  const std::vector<double> el =
      dims == 3 ? angle_grid(fov_v, n_v) : std::vector<double>{0.0};

  const Vec right = pose.right();
  bundle.dirs.reserve(static_cast<std::size_t>(n_h) * n_v);
  bundle.azimuth.reserve(bundle.dirs.capacity());
  bundle.elevation.reserve(bundle.dirs.capacity());
  for (double e : el) {
    for (double a : az) {
      Vec d = std::cos(e) * (std::cos(a) * pose.axis + std::sin(a) * right) +
              std::sin(e) * pose.up;
      if (dims == 2) d.z() = 0.0;
      bundle.dirs.push_back(d.normalized());
      bundle.azimuth.push_back(a);
      bundle.elevation.push_back(e);
    }
  }
  return bundle;
}

RaycastHit cast_ray(const Vec& origin, const Vec& dir, double d_max,
                    std::span<const Vec> obstacles,
                    std::span<const Vec> occluders,
                    std::span<const Vec> targets, double radius) {
  check_cast_args(d_max, radius);

  NearestState state;
  state.best = d_max;
  state.param = d_max;
  const int n_obs = static_cast<int>(obstacles.size());
  const int n_occ = static_cast<int>(occluders.size());
  scan_spheres(origin, dir, radius, obstacles, 0, state);
  scan_spheres(origin, dir, radius, occluders, n_obs, state);
  scan_spheres(origin, dir, radius, targets, n_obs + n_occ, state);

  RaycastHit hit;
  hit.terminal = origin + state.param * dir;
  hit.distance = state.best;
  if (state.winner < 0) {
    hit.kind = HitKind::kNone;
  } else if (state.winner < n_obs) {
    hit.kind = HitKind::kObstacle;
  } else if (state.winner < n_obs + n_occ) {
    hit.kind = HitKind::kOccluder;
  } else {
    hit.kind = HitKind::kTarget;
    hit.target_index = state.winner - n_obs - n_occ;
  }
  return hit;
}

std::vector<RaycastHit> cast_bundle_serial(
    const Pose& pose, const RayBundle& bundle, std::span<const Vec> obstacles,
    std::span<const Vec> occluders, std::span<const Vec> targets, double d_max,
    double radius) {
  std::vector<RaycastHit> hits(bundle.dirs.size());
  for (std::size_t i = 0; i < bundle.dirs.size(); ++i) {
    hits[i] = cast_ray(pose.position, bundle.dirs[i], d_max, obstacles,
                       occluders, targets, radius);
    hits[i].ray_index = static_cast<int>(i);
  }
  return hits;
}

std::vector<RaycastHit> cast_bundle(const Pose& pose, const RayBundle& bundle,
                                    std::span<const Vec> obstacles,
                                    std::span<const Vec> occluders,
                                    std::span<const Vec> targets, double d_max,
                                    double radius) {
  check_cast_args(d_max, radius);  // keep throws out of the parallel region
  std::vector<RaycastHit> hits(bundle.dirs.size());
  const auto n = static_cast<std::int64_t>(bundle.dirs.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    hits[i] = cast_ray(pose.position, bundle.dirs[i], d_max, obstacles,
                       occluders, targets, radius);
    hits[i].ray_index = static_cast<int>(i);
  }
  return hits;
}

}  // namespace photoplan
