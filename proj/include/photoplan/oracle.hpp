#ifndef PHOTOPLAN_ORACLE_HPP
#define PHOTOPLAN_ORACLE_HPP

#include <optional>
#include <span>
#include <vector>

#include "photoplan/scenario.hpp"
#include "photoplan/target.hpp"

namespace photoplan {

/// Brute-force reference caster: steps t = 0, step, 2·step, ... up to d_max
/// and reports the first parameter whose point lies strictly inside any
/// sphere. Deliberately shares no code with the analytic caster so the two
/// can check each other.
std::optional<double> march_ray(const Vec& origin, const Vec& dir,
                                double d_max, std::span<const Vec> spheres,
                                double radius, double step);

struct HeatmapCell {
  Vec position;
  double gamma_d = 0.0;
  double gamma_s = 0.0;
  double gain = 0.0;   ///< binary-visibility coverage gain
  double score = 0.0;  ///< gamma_d * gamma_s * gain
  bool feasible = false;
};

struct Heatmap {
  std::vector<HeatmapCell> cells;  ///< row-major over the sample lattice
  std::array<int, 3> lattice_shape{0, 0, 1};
  double step = 1.0;
  int best_index = -1;  ///< argmax over feasible cells, lowest index on ties

  const HeatmapCell& best() const { return cells.at(static_cast<std::size_t>(best_index)); }
};

/// Exhaustively scores a position lattice (spacing `step`, inclusive of both
/// workspace bounds) against the fully known world: true obstacle geometry,
/// the navigation mask derived from it, and dense capture rays. Visibility
/// is binary per surface sphere, so the result is optimizer-free ground
/// truth for "where is the best next photo from".
Heatmap compute_heatmap(const Scenario& scenario, const CoverageField& field,
                        double step);

/// Single-threaded twin of compute_heatmap for determinism checks.
Heatmap compute_heatmap_serial(const Scenario& scenario,
                               const CoverageField& field, double step);

}  // namespace photoplan

#endif  // PHOTOPLAN_ORACLE_HPP
