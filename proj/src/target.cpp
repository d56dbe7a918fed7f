#include "photoplan/target.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace photoplan {

namespace {

/// Face-centered 1D offsets covering a span of length `extent` at spacing
/// <= `spacing`: n = ceil(extent / spacing) samples at (i + 0.5) * extent/n.
std::vector<double> lattice(double extent, double spacing) {
  const int n = std::max(1, static_cast<int>(std::ceil(extent / spacing)));
  std::vector<double> off(n);
  const double step = extent / n;
  for (int i = 0; i < n; ++i) off[i] = (i + 0.5) * step;
  return off;
}

struct FaceSpec {
  std::string name;
  int axis;  // face plane normal axis
  int sign;  // +1 or -1
};

const std::vector<FaceSpec>& face_specs(int dims) {
  static const std::vector<FaceSpec> k2d = {
      {"south", 1, -1}, {"east", 0, 1}, {"north", 1, 1}, {"west", 0, -1}};
  static const std::vector<FaceSpec> k3d = {{"xneg", 0, -1}, {"xpos", 0, 1},
                                            {"yneg", 1, -1}, {"ypos", 1, 1},
                                            {"zneg", 2, -1}, {"zpos", 2, 1}};
  return dims == 2 ? k2d : k3d;
}

std::vector<Vec> sample_face(const Vec& center, const Vec& half,
                             const FaceSpec& spec, double spacing, int dims) {
  std::vector<Vec> out;
  Vec base = center;
  base[spec.axis] += spec.sign * half[spec.axis];
  if (dims == 2) {
    const int u = spec.axis == 0 ? 1 : 0;
    for (double o : lattice(2.0 * half[u], spacing)) {
      Vec p = base;
      p[u] = center[u] - half[u] + o;
      out.push_back(p);
    }
  } else {
    const int u = spec.axis == 0 ? 1 : 0;
    const int v = spec.axis == 2 ? 1 : 2;
    for (double ov : lattice(2.0 * half[v], spacing)) {
      for (double ou : lattice(2.0 * half[u], spacing)) {
        Vec p = base;
        p[u] = center[u] - half[u] + ou;
        p[v] = center[v] - half[v] + ov;
        out.push_back(p);
      }
    }
  }
  return out;
}

}  // namespace

TargetModel TargetModel::box(const Vec& center, const Vec& extents,
                             double spacing, int dims,
                             const std::vector<std::string>& active,
                             double occluder_spacing) {
  if (dims != 2 && dims != 3) {
    throw std::invalid_argument("target: dims must be 2 or 3");
  }
  if (spacing <= 0.0) {
    throw std::invalid_argument("target: spacing must be positive");
  }
  if (occluder_spacing <= 0.0) occluder_spacing = spacing;
  for (int a = 0; a < dims; ++a) {
    if (extents[a] <= 0.0) {
      throw std::invalid_argument("target: extents must be positive");
    }
  }

  TargetModel model;
  model.dims_ = dims;
  model.spacing_ = spacing;
  model.aabb_.center = center;
  model.aabb_.half = 0.5 * extents;
  if (dims == 2) {
    model.aabb_.center.z() = 0.0;
    model.aabb_.half.z() = 0.0;
  }

  const auto& specs = face_specs(dims);
  for (const auto& spec : specs) {
    const bool is_active =
        active.empty() ||
        std::find(active.begin(), active.end(), spec.name) != active.end();
    if (is_active) {
      auto samples = sample_face(model.aabb_.center, model.aabb_.half, spec,
                                 spacing, dims);
      Face face;
      face.name = spec.name;
      face.normal = Vec::Zero();
      face.normal[spec.axis] = spec.sign;
      face.begin = static_cast<int>(model.coords_.size());
      model.coords_.insert(model.coords_.end(), samples.begin(),
                           samples.end());
      face.end = static_cast<int>(model.coords_.size());
      model.faces_.push_back(face);
    } else {
      auto samples = sample_face(model.aabb_.center, model.aabb_.half, spec,
                                 occluder_spacing, dims);
      model.occluders_.insert(model.occluders_.end(), samples.begin(),
                              samples.end());
    }
  }
  if (!active.empty()) {
    // Reject unknown face names so scenario typos cannot silently shrink
    // the photographed surface.
    for (const auto& name : active) {
      bool known = false;
      for (const auto& spec : specs) known = known || spec.name == name;
      if (!known) {
        throw std::invalid_argument("target: unknown face name '" + name +
                                    "'");
      }
    }
  }
  if (model.coords_.empty()) {
    throw std::invalid_argument("target: no active faces");
  }
  return model;
}

Vec TargetModel::interest_centroid(const Eigen::VectorXd& mu) const {
  if (mu.size() != static_cast<Eigen::Index>(coords_.size())) {
    throw std::invalid_argument("interest_centroid: mu size mismatch");
  }
  Vec weighted = Vec::Zero();
  Vec plain = Vec::Zero();
  double total = 0.0;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    const double w = std::max(0.0, 1.0 - mu[static_cast<Eigen::Index>(j)]);
    weighted += w * coords_[j];
    plain += coords_[j];
    total += w;
  }
  if (total < 1e-9) return plain / static_cast<double>(coords_.size());
  return weighted / total;
}

std::vector<Vec> box_surface_samples(const Box& box, double spacing, int dims) {
  if (spacing <= 0.0) {
    throw std::invalid_argument("box_surface_samples: spacing must be > 0");
  }
  std::vector<Vec> out;
  Box b = box;
  if (dims == 2) {
    b.center.z() = 0.0;
    b.half.z() = 0.0;
  }
  for (const auto& spec : face_specs(dims)) {
    auto samples = sample_face(b.center, b.half, spec, spacing, dims);
    out.insert(out.end(), samples.begin(), samples.end());
  }
  return out;
}

std::vector<std::size_t> TargetModel::body_cells(const Workspace& ws) const {
  std::vector<std::size_t> cells;
  const Vec lo = aabb_.min();
  const Vec hi = aabb_.max();
  std::array<int, 3> c_lo = ws.cell_of(lo);
  std::array<int, 3> c_hi = ws.cell_of(hi);
  for (int z = c_lo[2]; z <= c_hi[2]; ++z) {
    for (int y = c_lo[1]; y <= c_hi[1]; ++y) {
      for (int x = c_lo[0]; x <= c_hi[0]; ++x) {
        const std::array<int, 3> c = {x, y, z};
        if (aabb_.contains(ws.cell_center(c), dims_)) {
          cells.push_back(ws.linear_index(c));
        }
      }
    }
  }
  return cells;
}

}  // namespace photoplan
