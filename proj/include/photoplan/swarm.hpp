#ifndef PHOTOPLAN_SWARM_HPP
#define PHOTOPLAN_SWARM_HPP

#include <functional>
#include <vector>

#include "photoplan/metric.hpp"
#include "photoplan/rng.hpp"
#include "photoplan/workspace.hpp"

namespace photoplan {

struct SwarmConfig {
  int particles = 20;
  int iterations = 60;       ///< fresh optimization budget
  int warm_iterations = 20;  ///< budget when warm-started mid-mission
  double inertia = 0.7;      ///< w, must satisfy 0 <= w < 1
  double cognitive = 1.5;    ///< c1
  double social = 1.5;       ///< c2
  double velocity_cap_fraction = 0.1;  ///< of the workspace diagonal
  int init_retries = 100;    ///< feasible-position draws per particle

  void validate() const;
};

struct Particle {
  Vec position = Vec::Zero();
  Vec velocity = Vec::Zero();
  Vec best_position = Vec::Zero();
  double score = kInfeasibleScore;
  double best_score = kInfeasibleScore;
};

/// Swarm state. Persisted across mission re-optimizations for warm starts:
/// positions and velocities carry over, remembered best scores do not (the
/// objective changes whenever the map or the coverage field does).
struct Swarm {
  std::vector<Particle> particles;
  Vec global_best_position = Vec::Zero();
  double global_best_score = kInfeasibleScore;
  bool initialized = false;
};

using ScoreFunction = std::function<double(const Vec&)>;

/// Draws uniform feasible positions (up to init_retries attempts each,
/// throws when a particle cannot be placed), zero velocities, bests unset.
void swarm_initialize(Swarm& swarm, const SwarmConfig& cfg,
                      const Workspace& ws, const ScoreFunction& feasible,
                      Rng& rng);

/// Scores all current particle positions. The parallel variant writes one
/// slot per particle and is bit-identical to the serial one.
void swarm_score(Swarm& swarm, const ScoreFunction& score);
void swarm_score_serial(Swarm& swarm, const ScoreFunction& score);

/// Folds current scores into personal/global bests (strict improvement).
void swarm_absorb_scores(Swarm& swarm);

/// One velocity/position update:
///   v <- w v + c1 r1 (b - p) + c2 r2 (g - p),  p <- clamp(p + v)
/// with r1, r2 drawn per particle per step, |v| capped at
/// velocity_cap_fraction * workspace diagonal, and positions clamped to the
/// workspace box. Requires scores for the current positions (they are
/// absorbed into the bests first).
void pso_step(Swarm& swarm, const SwarmConfig& cfg, const Workspace& ws,
              Rng& rng);

struct OptimizeResult {
  Vec position = Vec::Zero();
  ViewScore score;
  Pose pose;
  int evaluations = 0;
  std::vector<double> eval_ms;  ///< per-candidate evaluation latencies
};

/// Global-best PSO over the view metric. Passing `warm` reuses (and updates)
/// swarm state across calls with the reduced warm_iterations budget;
/// otherwise a fresh swarm runs the full budget. Scoring within one step
/// runs against the frozen context snapshot.
OptimizeResult optimize_viewpoint(const ViewContext& ctx,
                                  const SwarmConfig& cfg, Rng& rng,
                                  Swarm* warm = nullptr);

}  // namespace photoplan

#endif  // PHOTOPLAN_SWARM_HPP
