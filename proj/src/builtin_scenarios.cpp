#include "photoplan/builtin_scenarios.hpp"

#include <stdexcept>

namespace photoplan {

const std::map<std::string, std::string>& builtin_scenario_texts() {
  static const std::map<std::string, std::string> texts = {
      {"free_space_2d", R"(# Open field, one 30 x 15 m building, photograph the south face.
dimensions = 2
workspace_min = 0 0
workspace_max = 100 100
resolution = 1
start = 50 5
seed = 1
target_center = 50 60
target_extents = 30 15
target_spacing = 1
target_faces = south
sphere_radius = 0.3
)"},
      {"single_obstacle_2d", R"(# South face with one box obstacle offset from the approach corridor.
dimensions = 2
workspace_min = 0 0
workspace_max = 100 100
resolution = 1
start = 50 5
seed = 1
target_center = 50 60
target_extents = 30 15
target_spacing = 1
target_faces = south
obstacle = 38 42 3 2
# Default cast radius: this is the planning benchmark, where the sparse
# evaluation bundle must resolve every coordinate sphere out to sensor range.
# Captures commit against sphere surfaces, which caps achievable coverage
# below 0.95 at this radius, so the mission stops at a reachable threshold.
coverage_threshold = 0.9
)"},
      {"two_face_building_2d", R"(# Two visible faces and an obstacle shadowing part of the south face.
dimensions = 2
workspace_min = 0 0
workspace_max = 100 100
resolution = 1
start = 75 10
seed = 1
target_center = 50 60
target_extents = 30 15
target_spacing = 1
target_faces = south east
obstacle = 44 45 2.5 2.5
sphere_radius = 0.3
)"},
      {"slash_obstacle_2d", R"(# Staggered boxes forming a diagonal wall across the approach.
dimensions = 2
workspace_min = 0 0
workspace_max = 100 100
resolution = 1
start = 30 8
seed = 1
target_center = 50 60
target_extents = 30 15
target_spacing = 1
target_faces = south
obstacle = 30 30 2.5 2.5
obstacle = 36 35 2.5 2.5
obstacle = 42 40 2.5 2.5
sphere_radius = 0.3
)"},
      {"t_obstacle_2d", R"(# T-shaped blocker in front of the face: crossbar plus stem.
dimensions = 2
workspace_min = 0 0
workspace_max = 100 100
resolution = 1
start = 50 6
seed = 1
target_center = 50 60
target_extents = 30 15
target_spacing = 1
target_faces = south
obstacle = 50 38 8 1.5
obstacle = 50 30.5 1.5 6
sphere_radius = 0.3
)"},
      {"slab_3d", R"(# Volumetric case: one face of a cube behind a floating slab.
dimensions = 3
workspace_min = 0 0 0
workspace_max = 40 40 20
resolution = 1
start = 20 4 3
seed = 1
target_center = 20 28 8
target_extents = 10 1 10
target_spacing = 1
target_faces = yneg
obstacle = 20 16 8 6 0.5 4
inflation = 1.6
sphere_radius = 0.3
# The scale term drives close-in tiling of the 10x10 face, and commits
# interpolate from sphere-surface samples, so the face perimeter saturates
# slowly; 0.9 keeps the demo ending on coverage instead of the photo budget.
coverage_threshold = 0.9
)"},
  };
  return texts;
}

Scenario builtin_scenario(const std::string& name) {
  const auto& texts = builtin_scenario_texts();
  auto it = texts.find(name);
  if (it == texts.end()) {
    std::string known;
    for (const auto& [key, _] : texts) {
      if (!known.empty()) known += ", ";
      known += key;
    }
    throw std::invalid_argument("unknown scenario '" + name +
                                "' (bundled: " + known + ")");
  }
  return parse_scenario(it->second, name);
}

}  // namespace photoplan
