#include "photoplan/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace photoplan {

double logistic_utility(double x, const UtilityParams& q) {
  return q.q1 + q.q2 / (1.0 + std::exp(q.q3 * (x + q.q4)));
}

namespace {

/// Imbalance ratio of extreme offsets on one image axis. Offsets on only one
/// side of the optical axis clamp the empty side to 0, which drives the
/// ratio to 1 (fully one-sided capture).
double imbalance_ratio(double min_off, double max_off) {
  const double l1 = std::max(0.0, -min_off);
  const double l2 = std::max(0.0, max_off);
  const double total = l1 + l2;
  if (total < 1e-12) return 1.0;  // single grazing hit, worst case
  return std::abs(l2 - l1) / total;
}

}  // namespace

double distortion_factor(const Pose& pose, const std::vector<RaycastHit>& hits,
                         const UtilityParams& q, int dims) {
  const Vec right = pose.right();
  bool any = false;
  double min_h = 0.0, max_h = 0.0, min_v = 0.0, max_v = 0.0;
  for (const auto& hit : hits) {
    if (hit.kind != HitKind::kTarget) continue;
    const Vec rel = hit.terminal - pose.position;
    const double oh = rel.dot(right);
    const double ov = rel.dot(pose.up);
    if (!any) {
      min_h = max_h = oh;
      min_v = max_v = ov;
      any = true;
    } else {
      min_h = std::min(min_h, oh);
      max_h = std::max(max_h, oh);
      min_v = std::min(min_v, ov);
      max_v = std::max(max_v, ov);
    }
  }
  if (!any) return 0.0;
  double factor = logistic_utility(imbalance_ratio(min_h, max_h), q);
  if (dims == 3) {
    factor *= logistic_utility(imbalance_ratio(min_v, max_v), q);
  }
  return factor;
}

double scale_factor(const RayBundle& bundle,
                    const std::vector<RaycastHit>& hits,
                    const ScaleUtility& scale, int dims) {
  bool any = false;
  double min_az = 0.0, max_az = 0.0, min_el = 0.0, max_el = 0.0;
  for (const auto& hit : hits) {
    if (hit.kind != HitKind::kTarget) continue;
    const double az = bundle.azimuth[hit.ray_index];
    const double el = bundle.elevation[hit.ray_index];
    if (!any) {
      min_az = max_az = az;
      min_el = max_el = el;
      any = true;
    } else {
      min_az = std::min(min_az, az);
      max_az = std::max(max_az, az);
      min_el = std::min(min_el, el);
      max_el = std::max(max_el, el);
    }
  }
  if (!any) return 0.0;
  double factor = scale((max_az - min_az) / bundle.fov_h);
  if (dims == 3) {
    factor *= scale((max_el - min_el) / bundle.fov_v);
  }
  return factor;
}

ViewContext ViewContext::make(const Workspace& ws, const TargetModel& target,
                              const CoverageField& field, const NavMask& nav,
                              std::vector<Vec> obstacles, const GPModel& gp,
                              const CameraParams& cam, double d_max,
                              double radius) {
  if (field.mu.size() != static_cast<Eigen::Index>(target.coords().size())) {
    throw std::invalid_argument("view context: field/target size mismatch");
  }
  ViewContext ctx;
  ctx.ws = &ws;
  ctx.target = &target;
  ctx.field = &field;
  ctx.nav = &nav;
  ctx.obstacles = std::move(obstacles);
  ctx.gp = gp;
  ctx.cam = cam;
  ctx.d_max = d_max;
  ctx.radius = radius;
  ctx.aim = target.interest_centroid(field.mu);
  return ctx;
}

CandidateCast cast_candidate(const ViewContext& ctx, const Vec& position,
                             int rays_h, int rays_v) {
  CandidateCast cast;
  cast.pose = Pose::look_at(position, ctx.aim, ctx.ws->dims);
  cast.bundle = generate_ray_bundle(cast.pose, ctx.cam.fov_h, ctx.cam.fov_v,
                                    rays_h, rays_v, ctx.ws->dims);
  cast.hits = cast_bundle_serial(cast.pose, cast.bundle, ctx.obstacles,
                                 ctx.target->occluder_coords(),
                                 ctx.target->coords(), ctx.d_max, ctx.radius);
  for (const auto& hit : cast.hits) {
    if (hit.kind == HitKind::kTarget) ++cast.target_hits;
  }
  return cast;
}

ViewScore evaluate_viewpoint(const ViewContext& ctx, const Vec& position) {
  ViewScore score;
  bool ok = ctx.ws->contains(position) && !ctx.nav->blocked(position);
  if (ok && ctx.reachable != nullptr) {
    ok = (*ctx.reachable)[ctx.ws->linear_index(ctx.ws->cell_of(position))] !=
         0;
  }
  if (!ok) {
    score.feasible = false;
    score.g = kInfeasibleScore;
    return score;
  }
  const CandidateCast cast =
      cast_candidate(ctx, position, ctx.cam.eval_rays_h, ctx.cam.eval_rays_v);
  if (cast.target_hits == 0) {
    return score;  // nothing visible: all factors 0, g = 0
  }
  score.gamma_d =
      distortion_factor(cast.pose, cast.hits, ctx.cam.distortion, ctx.ws->dims);
  score.gamma_s =
      scale_factor(cast.bundle, cast.hits, ctx.cam.scale, ctx.ws->dims);
  score.coverage_sum =
      expected_gain(*ctx.field, *ctx.target, cast.hits, ctx.gp, ctx.sample_cap);
  score.g = score.gamma_d * score.gamma_s * score.coverage_sum;
  return score;
}

}  // namespace photoplan
