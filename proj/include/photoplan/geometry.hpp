#ifndef PHOTOPLAN_GEOMETRY_HPP
#define PHOTOPLAN_GEOMETRY_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <cmath>
#include <vector>

namespace photoplan {

/// All positions and directions are world-frame Eigen vectors. Planar (2D)
/// scenarios keep the z component at exactly 0 everywhere, so norms and dot
/// products work unchanged in both dimensionalities.
using Vec = Eigen::Vector3d;

/// Axis-aligned box given by center and half extents (meters).
struct Box {
  Vec center = Vec::Zero();
  Vec half = Vec::Zero();  ///< half extents; z half extent ignored in 2D

  Vec min() const { return center - half; }
  Vec max() const { return center + half; }

  /// True iff point lies inside the box grown by margin on every axis.
  bool contains(const Vec& p, int dims, double margin = 0.0) const {
    for (int a = 0; a < dims; ++a) {
      if (std::abs(p[a] - center[a]) > half[a] + margin) return false;
    }
    return true;
  }

  /// Euclidean distance from p to the box surface (0 inside).
  double distance(const Vec& p, int dims) const {
    double d2 = 0.0;
    for (int a = 0; a < dims; ++a) {
      double e = std::abs(p[a] - center[a]) - half[a];
      if (e > 0.0) d2 += e * e;
    }
    return std::sqrt(d2);
  }
};

/// Camera / sensor pose. `axis` is the optical axis (unit), `up` the image
/// vertical (unit, orthogonal to axis). In 2D `up` is +z and only the
/// horizontal image axis exists.
struct Pose {
  Vec position = Vec::Zero();
  Vec axis = Vec::UnitX();
  Vec up = Vec::UnitZ();

  Vec right() const { return axis.cross(up); }

  /// Pose at `position` looking toward `at`. Falls back to +x when the two
  /// points coincide. In 3D the image vertical is the projection of world z
  /// (or world x when the axis is vertical).
  static Pose look_at(const Vec& position, const Vec& at, int dims) {
    Pose pose;
    pose.position = position;
    Vec d = at - position;
    if (dims == 2) d.z() = 0.0;
    double n = d.norm();
    pose.axis = n > 1e-12 ? Vec(d / n) : Vec::UnitX();
    if (dims == 2) {
      pose.axis.z() = 0.0;
      pose.axis.normalize();
      pose.up = Vec::UnitZ();
    } else {
      Vec ref = std::abs(pose.axis.dot(Vec::UnitZ())) > 0.999 ? Vec::UnitX()
                                                              : Vec::UnitZ();
      Vec r = pose.axis.cross(ref).normalized();
      pose.up = r.cross(pose.axis).normalized();
    }
    return pose;
  }
};

inline double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

}  // namespace photoplan

#endif  // PHOTOPLAN_GEOMETRY_HPP
