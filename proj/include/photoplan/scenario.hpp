#ifndef PHOTOPLAN_SCENARIO_HPP
#define PHOTOPLAN_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "photoplan/geometry.hpp"
#include "photoplan/metric.hpp"
#include "photoplan/occupancy.hpp"
#include "photoplan/swarm.hpp"
#include "photoplan/target.hpp"
#include "photoplan/workspace.hpp"

namespace photoplan {

struct SensorParams {
  double fov_h = 1.5707963267948966;  ///< pi/2
  double fov_v = 1.5707963267948966;
  double range = 25.0;  ///< d_max, meters
  int rays_h = 61;
  int rays_v = 1;
};

struct MissionParams {
  double coverage_threshold = 0.95;
  int max_photos = 10;
  double gain_floor = 1e-3;     ///< best G below this terminates the mission
  int reopt_interval = 3;      ///< ticks between scheduled re-optimizations
  double score_drop_ratio = 0.5;  ///< re-optimize when score falls below this
  int max_ticks = 2000;        ///< hard safety valve
  double inflation = 1.5;      ///< collision clearance, meters
  int rrt_iterations = 5000;
};

/// A fully described planning problem: world geometry, target surface,
/// sensing and camera models, optimizer and mission settings. Loaded from a
/// line-oriented `key = values` text file (see scenarios/ and the README for
/// the schema); every numeric field has the default shown here.
struct Scenario {
  std::string name = "scenario";
  Workspace ws;
  Box target_box;
  std::vector<std::string> target_faces;  ///< empty = every face
  double target_spacing = 1.0;
  std::vector<Box> obstacles;
  SensorParams sensor;
  CameraParams camera;
  GPModel gp;
  SwarmConfig swarm;
  MissionParams mission;
  double sphere_radius = 0.75;  ///< c_r; default 0.75 x target_spacing
  Vec start = Vec::Zero();
  std::uint64_t seed = 1;

  TargetModel make_target() const;

  /// Surface spheres of the true obstacle boxes, for sensing casts.
  std::vector<Vec> true_obstacle_samples() const;

  /// Occupancy grid with every true-obstacle body cell saturated; the
  /// fully-known counterpart of a believed map.
  OccupancyGrid true_occupancy() const;
};

struct ScenarioParseError : std::runtime_error {
  ScenarioParseError(const std::string& message, int line)
      : std::runtime_error("scenario:" + std::to_string(line) + ": " +
                           message),
        line(line) {}
  int line = 0;
};

/// Parses a scenario file. Unknown keys, wrong value counts, malformed
/// numbers and missing required keys all raise ScenarioParseError with the
/// offending line number.
Scenario load_scenario(const std::string& path);

/// Parses scenario text (same format as the files).
Scenario parse_scenario(const std::string& text, const std::string& name);

}  // namespace photoplan

#endif  // PHOTOPLAN_SCENARIO_HPP
