#ifndef PHOTOPLAN_IO_HPP
#define PHOTOPLAN_IO_HPP

#include <string>

#include "photoplan/mission.hpp"
#include "photoplan/oracle.hpp"

namespace photoplan {

/// Shortest decimal form that parses back to the same double. Identical
/// values always format identically, which is what the byte-stable output
/// contract needs.
std::string format_number(double v);

/// Writes trace.csv, photos.csv, coverage_curve.csv, coverage_final.csv and
/// timing.txt under `dir` (created if missing). Everything except
/// timing.txt is a pure function of the log's deterministic fields.
void write_mission_outputs(const MissionLog& log, const std::string& dir);

/// Writes the feasible heatmap rows as x,y[,z],score with a one-line header.
void write_heatmap_csv(const Heatmap& map, int dims, const std::string& path);

}  // namespace photoplan

#endif  // PHOTOPLAN_IO_HPP
