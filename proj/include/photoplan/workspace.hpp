#ifndef PHOTOPLAN_WORKSPACE_HPP
#define PHOTOPLAN_WORKSPACE_HPP

#include <array>
#include <stdexcept>

#include "photoplan/geometry.hpp"

namespace photoplan {

/// Axis-aligned workspace with a uniform cell grid. 2D workspaces keep one
/// cell along z and pin all z coordinates to 0.
struct Workspace {
  int dims = 2;  ///< 2 or 3
  Vec lower = Vec::Zero();
  Vec upper = Vec::Zero();
  double resolution = 1.0;
  std::array<int, 3> shape = {0, 0, 1};  ///< cells per axis, z == 1 in 2D

  Workspace() = default;

  Workspace(int dims_, const Vec& lower_, const Vec& upper_, double res)
      : dims(dims_), lower(lower_), upper(upper_), resolution(res) {
    if (dims != 2 && dims != 3) {
      throw std::invalid_argument("workspace: dims must be 2 or 3");
    }
    if (res <= 0.0) {
      throw std::invalid_argument("workspace: resolution must be positive");
    }
    for (int a = 0; a < dims; ++a) {
      if (!(lower[a] < upper[a])) {
        throw std::invalid_argument(
            "workspace: lower bound must be below upper bound on every axis");
      }
      shape[a] = static_cast<int>(std::ceil((upper[a] - lower[a]) / res));
    }
    if (dims == 2) {
      lower.z() = 0.0;
      upper.z() = 0.0;
      shape[2] = 1;
    }
  }

  std::size_t cell_count() const {
    return static_cast<std::size_t>(shape[0]) * shape[1] * shape[2];
  }

  /// Closed containment test: boundary positions count as inside.
  bool contains(const Vec& p) const {
    for (int a = 0; a < dims; ++a) {
      if (p[a] < lower[a] || p[a] > upper[a]) return false;
    }
    return true;
  }

  /// Cell index along each axis for a contained position. Positions exactly
  /// on the upper bound map to the last cell.
  std::array<int, 3> cell_of(const Vec& p) const {
    std::array<int, 3> c = {0, 0, 0};
    for (int a = 0; a < dims; ++a) {
      int i = static_cast<int>(std::floor((p[a] - lower[a]) / resolution));
      if (i < 0) i = 0;
      if (i >= shape[a]) i = shape[a] - 1;
      c[a] = i;
    }
    return c;
  }

  std::size_t linear_index(const std::array<int, 3>& c) const {
    return (static_cast<std::size_t>(c[2]) * shape[1] + c[1]) * shape[0] +
           c[0];
  }

  bool valid_cell(const std::array<int, 3>& c) const {
    for (int a = 0; a < 3; ++a) {
      if (c[a] < 0 || c[a] >= shape[a]) return false;
    }
    return true;
  }

  /// World position of a cell center; z stays 0 in 2D.
  Vec cell_center(const std::array<int, 3>& c) const {
    Vec p = Vec::Zero();
    for (int a = 0; a < dims; ++a) {
      p[a] = lower[a] + (c[a] + 0.5) * resolution;
    }
    return p;
  }

  double diagonal() const {
    double d2 = 0.0;
    for (int a = 0; a < dims; ++a) {
      double e = upper[a] - lower[a];
      d2 += e * e;
    }
    return std::sqrt(d2);
  }
};

}  // namespace photoplan

#endif  // PHOTOPLAN_WORKSPACE_HPP
