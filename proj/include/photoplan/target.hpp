#ifndef PHOTOPLAN_TARGET_HPP
#define PHOTOPLAN_TARGET_HPP

#include <Eigen/Core>
#include <string>
#include <vector>

#include "photoplan/geometry.hpp"
#include "photoplan/workspace.hpp"

namespace photoplan {

/// Discretized surface of the structure to photograph.
///
/// The photographed surface is a subset of the faces of an axis-aligned box;
/// faces left out of the subset still exist physically, so their samples are
/// kept as occluder spheres (they block rays but carry no coverage state and
/// are never mapped as obstacles).
class TargetModel {
 public:
  struct Face {
    std::string name;
    Vec normal = Vec::Zero();
    int begin = 0;  ///< first coordinate index of this face
    int end = 0;    ///< one past the last coordinate index
  };

  TargetModel() = default;

  /// Face names: south/east/north/west (2D, outward normals -y/+x/+y/-x) or
  /// xneg/xpos/yneg/ypos/zneg/zpos (3D). Empty `active` means all faces.
  /// Samples are face-centered lattices at spacing <= `spacing`, so no two
  /// coordinates coincide (corners and edges are not duplicated).
  /// Inactive faces are sampled at `occluder_spacing` (default: `spacing`);
  /// pass a value <= the cast sphere radius to make them ray-tight.
  static TargetModel box(const Vec& center, const Vec& extents, double spacing,
                         int dims, const std::vector<std::string>& active = {},
                         double occluder_spacing = 0.0);

  const std::vector<Vec>& coords() const { return coords_; }
  const std::vector<Vec>& occluder_coords() const { return occluders_; }
  const std::vector<Face>& faces() const { return faces_; }
  double spacing() const { return spacing_; }
  int dims() const { return dims_; }
  Box aabb() const { return aabb_; }

  /// Interest-weighted centroid of the photographed coordinates; weights are
  /// the remaining interest 1 - mu. Falls back to the unweighted centroid
  /// when everything is captured.
  Vec interest_centroid(const Eigen::VectorXd& mu) const;

  /// Linear indices of all grid cells whose center lies inside the box
  /// body; planning treats these as statically blocked.
  std::vector<std::size_t> body_cells(const Workspace& ws) const;

 private:
  std::vector<Vec> coords_;
  std::vector<Vec> occluders_;
  std::vector<Face> faces_;
  double spacing_ = 1.0;
  int dims_ = 2;
  Box aabb_;
};

/// Surface samples of an axis-aligned box (all faces, face-centered lattice
/// at spacing <= `spacing`). Used to turn true obstacle boxes into cast
/// spheres for sensing.
std::vector<Vec> box_surface_samples(const Box& box, double spacing, int dims);

/// Per-coordinate capture belief mu in [0, 1] plus every committed photo
/// sample, in commit order.
struct CoverageField {
  Eigen::VectorXd mu;          ///< size m, all zeros for a fresh field
  std::vector<Vec> sample_x;   ///< committed sample locations
  std::vector<double> sample_y;  ///< committed binary labels

  explicit CoverageField(int m = 0) : mu(Eigen::VectorXd::Zero(m)) {}

  double mean() const { return mu.size() == 0 ? 0.0 : mu.mean(); }
};

}  // namespace photoplan

#endif  // PHOTOPLAN_TARGET_HPP
