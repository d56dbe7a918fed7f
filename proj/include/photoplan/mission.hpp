#ifndef PHOTOPLAN_MISSION_HPP
#define PHOTOPLAN_MISSION_HPP

#include <memory>
#include <string>
#include <vector>

#include "photoplan/metric.hpp"
#include "photoplan/planner.hpp"
#include "photoplan/scenario.hpp"
#include "photoplan/sensing.hpp"
#include "photoplan/swarm.hpp"

namespace photoplan {

struct TraceRow {
  int tick = 0;
  Vec position = Vec::Zero();
  double coverage = 0.0;
  int photos = 0;
  double best_score = 0.0;  ///< objective of the active viewpoint, 0 if none
};

struct PhotoRecord {
  int index = 0;
  int tick = 0;
  Vec position = Vec::Zero();
  ViewScore score;
  double coverage_before = 0.0;
  double coverage_after = 0.0;
};

struct MissionLog {
  std::string scenario_name;
  std::uint64_t seed = 0;
  std::vector<TraceRow> trace;
  std::vector<PhotoRecord> photos;
  std::vector<double> coverage_curve;  ///< coverage mean after each tick
  std::vector<double> eval_ms;         ///< per-candidate evaluation latencies
  std::string termination;  ///< coverage | max_photos | gain_floor |
                            ///< no_progress | no_viewpoint | no_path | max_ticks
  int ticks = 0;
  bool aborted = false;  ///< true for the diagnostic terminations
  CoverageField final_field;
  std::vector<Vec> surface_coords;
};

/// Closed-loop next-best-view controller. One tick = sense and integrate,
/// re-optimize the viewpoint when stale or degraded, advance along the
/// planned path, capture when the viewpoint is reached. Owns all mutable
/// state; fully deterministic for a fixed scenario + seed.
class Mission {
 public:
  explicit Mission(const Scenario& scenario);

  /// Runs one control cycle. No-op once terminated.
  void tick();

  bool terminated() const { return !log_.termination.empty(); }
  const MissionLog& log() const { return log_; }
  const Vec& position() const { return position_; }
  const CoverageField& field() const { return field_; }
  const OccupancyGrid& believed_map() const { return grid_; }

  /// Ticks until termination (bounded by the scenario's max_ticks).
  MissionLog run();

 private:
  void sense();
  void rebuild_context();
  bool reoptimize();  ///< false when the mission terminated inside
  bool adopt_viewpoint(const Vec& pos, const ViewScore& score);
  void advance();
  void capture();
  void finish(const std::string& reason, bool aborted);

  Scenario scenario_;
  TargetModel target_;
  std::vector<Vec> true_samples_;
  OccupancyGrid grid_;
  CoverageField field_;
  GPModel gp_;

  std::unique_ptr<NavMask> mask_;
  std::unique_ptr<ViewContext> ctx_;
  std::vector<char> reachable_;  ///< cells routable from position_, see ctx_

  Rng opt_rng_;
  Rng planner_rng_;
  Swarm swarm_;
  bool swarm_warm_ = false;

  Vec position_;
  Vec last_motion_dir_;
  bool has_viewpoint_ = false;
  Vec viewpoint_ = Vec::Zero();
  double selection_score_ = 0.0;
  ViewScore selection_view_;
  Path path_;
  std::size_t path_leg_ = 1;
  int ticks_since_opt_ = 0;

  MissionLog log_;
};

MissionLog run_mission(const Scenario& scenario);

}  // namespace photoplan

#endif  // PHOTOPLAN_MISSION_HPP
