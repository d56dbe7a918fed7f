#include "photoplan/occupancy.hpp"

#include <stdexcept>

namespace photoplan {

bool is_colliding(const OccupancyGrid& grid, const Vec& position,
                  double inflation) {
  const Workspace& ws = grid.workspace();
  if (!ws.contains(position)) {
    throw std::domain_error("is_colliding: position outside workspace");
  }
  if (inflation < 0.0) {
    throw std::invalid_argument("is_colliding: inflation must be >= 0");
  }
  // Only cells whose center can be within `inflation` need checking.
  const int reach = static_cast<int>(inflation / ws.resolution) + 1;
  const std::array<int, 3> at = ws.cell_of(position);
  std::array<int, 3> lo = {0, 0, 0};
  std::array<int, 3> hi = {0, 0, 0};
  for (int a = 0; a < 3; ++a) {
    lo[a] = std::max(0, at[a] - reach);
    hi[a] = std::min(ws.shape[a] - 1, at[a] + reach);
  }
  for (int z = lo[2]; z <= hi[2]; ++z) {
    for (int y = lo[1]; y <= hi[1]; ++y) {
      for (int x = lo[0]; x <= hi[0]; ++x) {
        const std::array<int, 3> c = {x, y, z};
        if (!grid.occupied(ws.linear_index(c))) continue;
        if ((ws.cell_center(c) - position).norm() <= inflation) return true;
      }
    }
  }
  return false;
}

NavMask::NavMask(const OccupancyGrid& grid, double inflation,
                 const std::vector<std::size_t>& extra_blocked)
    : ws_(grid.workspace()), inflation_(inflation) {
  if (inflation < 0.0) {
    throw std::invalid_argument("NavMask: inflation must be >= 0");
  }
  const std::size_t n = ws_.cell_count();
  std::vector<std::uint8_t> source(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (grid.occupied(i)) source[i] = 1;
  }
  for (std::size_t idx : extra_blocked) source.at(idx) = 1;

  // Dilation radius: requested clearance plus half a cell diagonal, so that
  // any point inside a mask-free cell is >= inflation away from every
  // blocked cell center.
  const double half_diag = 0.5 * ws_.resolution * std::sqrt(double(ws_.dims));
  const double radius = inflation + half_diag;
  const int reach = static_cast<int>(radius / ws_.resolution) + 1;
  std::vector<std::array<int, 3>> offsets;
  const int zreach = ws_.dims == 3 ? reach : 0;
  for (int dz = -zreach; dz <= zreach; ++dz) {
    for (int dy = -reach; dy <= reach; ++dy) {
      for (int dx = -reach; dx <= reach; ++dx) {
        const double d =
            ws_.resolution * std::sqrt(double(dx * dx + dy * dy + dz * dz));
        if (d <= radius) offsets.push_back({dx, dy, dz});
      }
    }
  }

  blocked_.assign(n, 0);
  for (int z = 0; z < ws_.shape[2]; ++z) {
    for (int y = 0; y < ws_.shape[1]; ++y) {
      for (int x = 0; x < ws_.shape[0]; ++x) {
        if (!source[ws_.linear_index({x, y, z})]) continue;
        for (const auto& o : offsets) {
          const std::array<int, 3> c = {x + o[0], y + o[1], z + o[2]};
          if (ws_.valid_cell(c)) blocked_[ws_.linear_index(c)] = 1;
        }
      }
    }
  }
}

}  // namespace photoplan
