#include "photoplan/mission.hpp"

#include <algorithm>
#include <stdexcept>

#include "photoplan/log.hpp"

namespace photoplan {

Mission::Mission(const Scenario& scenario)
    : scenario_(scenario),
      target_(scenario.make_target()),
      true_samples_(scenario.true_obstacle_samples()),
      grid_(scenario.ws),
      field_(static_cast<int>(target_.coords().size())),
      gp_(scenario.gp),
      opt_rng_(scenario.seed ^ rng_stream::kOptimizer),
      planner_rng_(scenario.seed ^ rng_stream::kPlanner),
      position_(scenario.start),
      last_motion_dir_(Vec::Zero()) {
  if (!scenario_.ws.contains(position_)) {
    throw std::invalid_argument("mission start outside workspace");
  }
  for (const Box& box : scenario_.obstacles) {
    if (box.contains(position_, scenario_.ws.dims)) {
      throw std::invalid_argument("mission start inside an obstacle");
    }
  }
  log_.scenario_name = scenario_.name;
  log_.seed = scenario_.seed;
  log_.trace.push_back({0, position_, field_.mean(), 0, 0.0});
  log_.coverage_curve.push_back(field_.mean());
}

void Mission::finish(const std::string& reason, bool aborted) {
  log_.termination = reason;
  log_.aborted = aborted;
  log_.final_field = field_;
  log_.surface_coords = target_.coords();
  log_debug("mission '%s' finished: %s (%d ticks, %zu photos)",
            scenario_.name.c_str(), reason.c_str(), log_.ticks,
            log_.photos.size());
}

void Mission::sense() {
  const Vec centroid = target_.interest_centroid(field_.mu);
  Vec ahead = last_motion_dir_.norm() > 1e-9 ? Vec(position_ + last_motion_dir_)
                                             : centroid;
  Pose forward = Pose::look_at(position_, ahead, scenario_.ws.dims);
  Pose toward = Pose::look_at(position_, centroid, scenario_.ws.dims);
  for (const Pose& pose : {forward, toward}) {
    auto hits = simulate_depth_sensor(scenario_.ws, pose, scenario_.sensor,
                                      true_samples_, target_,
                                      scenario_.sphere_radius);
    integrate_depth_scan(grid_, position_, hits);
  }
}

void Mission::rebuild_context() {
  mask_ = std::make_unique<NavMask>(grid_, scenario_.mission.inflation,
                                    target_.body_cells(scenario_.ws));
  ctx_ = std::make_unique<ViewContext>(ViewContext::make(
      scenario_.ws, target_, field_, *mask_, grid_.occupied_centers(), gp_,
      scenario_.camera, scenario_.sensor.range, scenario_.sphere_radius));
  // Restrict candidate viewpoints to cells the robot can actually get to
  // from where it stands; a high-scoring pose in a sealed pocket would
  // otherwise win the optimization and then fail every planning attempt.
  reachable_ = reachable_cells(*mask_, position_);
  ctx_->reachable = &reachable_;
}

bool Mission::reoptimize() {
  // Warm starts are for en-route refinement only. When there is no active
  // viewpoint (mission start, or right after a capture) the previous swarm
  // has converged and carries no exploration pressure, so it is discarded.
  if (!has_viewpoint_) swarm_ = Swarm{};
  OptimizeResult res;
  auto run_swarm = [&](const char* kind) {
    res = optimize_viewpoint(*ctx_, scenario_.swarm, opt_rng_, &swarm_);
    log_.eval_ms.insert(log_.eval_ms.end(), res.eval_ms.begin(),
                        res.eval_ms.end());
    log_debug("reopt tick=%d %s: g=%.4f at (%.2f, %.2f, %.2f) feasible=%d",
              log_.ticks, kind, res.score.g, res.position.x(),
              res.position.y(), res.position.z(), res.score.feasible ? 1 : 0);
  };
  try {
    const bool warm = swarm_.initialized;
    run_swarm(warm ? "warm" : "cold");
    if (warm && (!res.score.feasible ||
                 res.score.g < scenario_.mission.gain_floor)) {
      // A warm swarm has already converged; when new sensing invalidates its
      // basin (route sealed shut, or the gain there already captured) its
      // particles have no exploration pressure left, so a poor result says
      // nothing about the rest of the workspace. Conclusions that could end
      // the mission must come from a fresh swarm.
      swarm_ = Swarm{};
      run_swarm("cold-retry");
    }
  } catch (const std::runtime_error&) {
    finish("no_viewpoint", true);
    return false;
  }
  if (!res.score.feasible) {
    finish("no_viewpoint", true);
    return false;
  }
  if (res.score.g < scenario_.mission.gain_floor) {
    finish("gain_floor", false);
    return false;
  }
  std::vector<Vec> tried;
  if (adopt_viewpoint(res.position, res.score)) return true;
  tried.push_back(res.position);

  // The believed map can rate a pose highly yet offer no route to it (an
  // apparent opening whose approaches are all inflated shut). Fall back to
  // the remaining particle bests, strongest first, before giving up.
  std::vector<const Particle*> order;
  for (const Particle& p : swarm_.particles) order.push_back(&p);
  std::sort(order.begin(), order.end(), [](const Particle* a,
                                           const Particle* b) {
    return a->best_score > b->best_score;
  });
  for (const Particle* p : order) {
    if (p->best_score < scenario_.mission.gain_floor) break;
    bool dup = false;
    for (const Vec& t : tried) {
      dup = dup || (p->best_position - t).norm() < scenario_.ws.resolution;
    }
    if (dup) continue;
    tried.push_back(p->best_position);
    const ViewScore score = evaluate_viewpoint(*ctx_, p->best_position);
    if (!score.feasible || score.g < scenario_.mission.gain_floor) continue;
    if (adopt_viewpoint(p->best_position, score)) return true;
    if (tried.size() >= 6) break;  // plans are the expensive part; bound them
  }
  finish("no_path", true);
  return false;
}

/// Plans a route to `pos` and, on success, installs it as the active
/// viewpoint. Leaves mission state untouched when no route exists.
bool Mission::adopt_viewpoint(const Vec& pos, const ViewScore& score) {
  Path path;
  try {
    if (scenario_.ws.dims == 2) {
      path = plan_grid_astar(*mask_, position_, pos);
    } else {
      path = plan_rrt_star(*mask_, position_, pos,
                           scenario_.mission.rrt_iterations, planner_rng_);
    }
  } catch (const PlanningError& e) {
    log_debug("no route to candidate (%.2f, %.2f, %.2f): %s", pos.x(),
              pos.y(), pos.z(), e.what());
    return false;
  }
  path_ = std::move(path);
  path_leg_ = 1;
  viewpoint_ = pos;
  selection_score_ = score.g;
  selection_view_ = score;
  has_viewpoint_ = true;
  ticks_since_opt_ = 0;
  return true;
}

void Mission::advance() {
  if (!has_viewpoint_ || path_.empty()) return;
  double budget = scenario_.ws.resolution;
  const Vec before = position_;
  while (budget > 1e-12 && path_leg_ < path_.waypoints.size()) {
    const Vec& wp = path_.waypoints[path_leg_];
    Vec d = wp - position_;
    double len = d.norm();
    if (len <= budget) {
      position_ = wp;
      budget -= len;
      ++path_leg_;
    } else {
      position_ += (budget / len) * d;
      budget = 0.0;
    }
  }
  Vec moved = position_ - before;
  if (moved.norm() > 1e-9) last_motion_dir_ = moved.normalized();
}

void Mission::capture() {
  position_ = viewpoint_;  // the photo is taken from the optimized pose
  Pose pose = Pose::look_at(position_, ctx_->aim, scenario_.ws.dims);
  RayBundle bundle = generate_ray_bundle(
      pose, scenario_.camera.fov_h, scenario_.camera.fov_v,
      scenario_.camera.capture_rays_h, scenario_.camera.capture_rays_v,
      scenario_.ws.dims);
  // Captures record reality, so they cast against the true obstacle set.
  auto hits =
      cast_bundle(pose, bundle, true_samples_, target_.occluder_coords(),
                  target_.coords(), scenario_.sensor.range,
                  scenario_.sphere_radius);

  const double before = field_.mean();
  commit_capture(field_, target_, hits, gp_, ctx_->sample_cap);
  const double after = field_.mean();

  PhotoRecord rec;
  rec.index = static_cast<int>(log_.photos.size());
  rec.tick = log_.ticks + 1;  // the cycle currently executing
  rec.position = position_;
  rec.score = selection_view_;
  rec.coverage_before = before;
  rec.coverage_after = after;
  log_.photos.push_back(rec);

  has_viewpoint_ = false;
  path_ = Path{};

  if (after >= scenario_.mission.coverage_threshold) {
    finish("coverage", false);
  } else if (static_cast<int>(log_.photos.size()) >=
             scenario_.mission.max_photos) {
    finish("max_photos", false);
  } else if (after <= before + 1e-12) {
    // A capture that adds nothing would repeat forever; stop instead.
    finish("no_progress", false);
  }
}

void Mission::tick() {
  if (terminated()) return;
  if (field_.mean() >= scenario_.mission.coverage_threshold) {
    finish("coverage", false);
    return;
  }

  sense();
  rebuild_context();

  bool need_opt = !has_viewpoint_ || ticks_since_opt_ >= scenario_.mission.reopt_interval;
  if (!need_opt) {
    ViewScore now = evaluate_viewpoint(*ctx_, viewpoint_);
    if (!now.feasible ||
        now.g < scenario_.mission.score_drop_ratio * selection_score_) {
      need_opt = true;
    }
  }

  if (need_opt) {
    if (!reoptimize()) return;
  } else {
    // Keep the current plan when it is still clear; otherwise replan, and
    // fall back to a fresh viewpoint if the old one became unreachable.
    bool clear = path_leg_ < path_.waypoints.size();
    if (clear) {
      clear = mask_->segment_clear(position_, path_.waypoints[path_leg_]);
      for (std::size_t k = path_leg_ + 1; clear && k < path_.waypoints.size();
           ++k) {
        clear = mask_->segment_clear(path_.waypoints[k - 1],
                                     path_.waypoints[k]);
      }
    }
    if (!clear) {
      try {
        if (scenario_.ws.dims == 2) {
          path_ = plan_grid_astar(*mask_, position_, viewpoint_);
        } else {
          path_ = plan_rrt_star(*mask_, position_, viewpoint_,
                                scenario_.mission.rrt_iterations,
                                planner_rng_);
        }
        path_leg_ = 1;
      } catch (const PlanningError&) {
        if (!reoptimize()) return;
      }
    }
  }
  ++ticks_since_opt_;

  advance();
  if (has_viewpoint_ &&
      (position_ - viewpoint_).norm() <= scenario_.ws.resolution) {
    capture();
  }

  ++log_.ticks;
  log_.trace.push_back({log_.ticks, position_, field_.mean(),
                        static_cast<int>(log_.photos.size()),
                        has_viewpoint_ ? selection_score_ : 0.0});
  log_.coverage_curve.push_back(field_.mean());

  if (!terminated() && log_.ticks >= scenario_.mission.max_ticks) {
    finish("max_ticks", true);
  }
}

MissionLog Mission::run() {
  while (!terminated()) tick();
  return log_;
}

MissionLog run_mission(const Scenario& scenario) {
  return Mission(scenario).run();
}

}  // namespace photoplan
