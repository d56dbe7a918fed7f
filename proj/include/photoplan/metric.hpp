#ifndef PHOTOPLAN_METRIC_HPP
#define PHOTOPLAN_METRIC_HPP

#include <limits>
#include <vector>

#include "photoplan/coverage_ops.hpp"
#include "photoplan/gp.hpp"
#include "photoplan/occupancy.hpp"
#include "photoplan/raycast.hpp"
#include "photoplan/target.hpp"

namespace photoplan {

/// Generalized logistic utility U(x, q) = q1 + q2 / (1 + e^{q3 (x + q4)}).
struct UtilityParams {
  double q1 = 0.0;
  double q2 = 1.0;
  double q3 = 1.0;
  double q4 = 0.0;
};

double logistic_utility(double x, const UtilityParams& q);

/// Piecewise logistic utility for the frame-fill fraction: `low` applies on
/// [0, knee], `high` on (knee, 1]. The published parameter pairs make both
/// branches meet at the knee.
struct ScaleUtility {
  double knee = 0.8;
  UtilityParams low{0.0, 1.0, -20.0, -0.5};
  UtilityParams high{0.0, 1.0, 30.0, -1.0};

  double operator()(double f) const {
    return logistic_utility(f, f <= knee ? low : high);
  }
};

inline constexpr UtilityParams kDefaultDistortionParams{0.3, 0.7, 20.0, -0.75};

/// Perspective-balance factor: per image axis, the target hits' extreme
/// lateral offsets (l1 left of the optical axis, l2 right of it, clamped at
/// 0 when all hits fall on one side) give the imbalance ratio
/// |l2 - l1| / (l1 + l2), pushed through the logistic utility; the factors
/// multiply across axes. Degenerate extents (single on-axis hit) count as
/// ratio 1, the worst imbalance. Returns 0 when no ray hit the target.
double distortion_factor(const Pose& pose, const std::vector<RaycastHit>& hits,
                         const UtilityParams& q, int dims);

/// Frame-fill factor: per angular axis, the fraction of the field of view
/// spanned by target-hitting rays, pushed through the piecewise utility;
/// factors multiply across axes. Returns 0 when no ray hit the target.
double scale_factor(const RayBundle& bundle,
                    const std::vector<RaycastHit>& hits,
                    const ScaleUtility& scale, int dims);

struct CameraParams {
  double fov_h = 1.5707963267948966;  ///< pi/2
  double fov_v = 1.5707963267948966;
  int eval_rays_h = 61;  ///< candidate-evaluation bundle
  int eval_rays_v = 1;
  int capture_rays_h = 721;  ///< dense capture bundle
  int capture_rays_v = 1;
  UtilityParams distortion = kDefaultDistortionParams;
  ScaleUtility scale;
};

/// Score of a candidate viewpoint. `g` is the product
/// gamma_d * gamma_s * coverage_sum; infeasible candidates carry
/// g = -infinity and feasible ones g >= 0.
struct ViewScore {
  double gamma_d = 0.0;
  double gamma_s = 0.0;
  double coverage_sum = 0.0;
  double g = 0.0;
  bool feasible = true;
};

inline constexpr double kInfeasibleScore =
    -std::numeric_limits<double>::infinity();

/// Frozen snapshot of everything one candidate evaluation needs. Snapshots
/// are immutable during an optimization pass, so particles can be scored in
/// parallel against the same context.
struct ViewContext {
  const Workspace* ws = nullptr;
  const TargetModel* target = nullptr;
  const CoverageField* field = nullptr;
  const NavMask* nav = nullptr;        ///< feasibility mask
  std::vector<Vec> obstacles;          ///< occluder spheres (believed or true)
  GPModel gp;
  CameraParams cam;
  double d_max = 25.0;   ///< cast range
  double radius = 0.75;  ///< sphere radius c_r
  int sample_cap = kDefaultSampleCap;
  Vec aim = Vec::Zero();  ///< optical-axis anchor (interest centroid)
  /// Optional per-cell route-existence flags (size = cell count). When set,
  /// candidates in cells the robot cannot reach score as infeasible, so the
  /// optimizer never selects a pose the planner would have to reject.
  const std::vector<char>* reachable = nullptr;

  static ViewContext make(const Workspace& ws, const TargetModel& target,
                          const CoverageField& field, const NavMask& nav,
                          std::vector<Vec> obstacles, const GPModel& gp,
                          const CameraParams& cam, double d_max,
                          double radius);
};

/// Pose, bundle and hits shared by the scoring variants. The optical axis
/// always points at the context's aim point.
struct CandidateCast {
  Pose pose;
  RayBundle bundle;
  std::vector<RaycastHit> hits;
  int target_hits = 0;
};

CandidateCast cast_candidate(const ViewContext& ctx, const Vec& position,
                             int rays_h, int rays_v);

/// Scores one candidate position: feasibility, evaluation-bundle cast,
/// perspective and frame-fill factors, and the GP coverage gain.
ViewScore evaluate_viewpoint(const ViewContext& ctx, const Vec& position);

}  // namespace photoplan

#endif  // PHOTOPLAN_METRIC_HPP
