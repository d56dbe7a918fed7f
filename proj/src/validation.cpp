#include "photoplan/validation.hpp"

#include <cmath>
#include <sstream>

#include "photoplan/builtin_scenarios.hpp"
#include "photoplan/coverage_ops.hpp"
#include "photoplan/metric.hpp"
#include "photoplan/oracle.hpp"
#include "photoplan/raycast.hpp"
#include "photoplan/rng.hpp"
#include "photoplan/swarm.hpp"

namespace photoplan {
namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

CheckResult close_check(const std::string& name, double got, double want,
                        double tol) {
  CheckResult c;
  c.name = name;
  c.pass = std::abs(got - want) <= tol;
  c.detail = "got " + fmt(got) + ", want " + fmt(want) + " +/- " + fmt(tol);
  return c;
}

/// True-world evaluation context for a scenario with no captures yet:
/// exactly what the heatmap oracle scores against.
struct TrueWorld {
  TargetModel target;
  CoverageField field;
  std::vector<Vec> obstacles;
  OccupancyGrid grid;
  NavMask mask;
  ViewContext ctx;

  explicit TrueWorld(const Scenario& s)
      : target(s.make_target()),
        field(static_cast<int>(target.coords().size())),
        obstacles(s.true_obstacle_samples()),
        grid(s.true_occupancy()),
        mask(grid, s.mission.inflation, target.body_cells(s.ws)),
        ctx(ViewContext::make(s.ws, target, field, mask, obstacles, s.gp,
                              s.camera, s.sensor.range, s.sphere_radius)) {}
};

}  // namespace

SuiteResult validate_utility() {
  SuiteResult suite{"utility", {}};
  const UtilityParams qd{0.3, 0.7, 20.0, -0.75};
  const ScaleUtility qs;  // published defaults
  const double tol = 1e-6;
  // Expected values evaluated independently (high-precision arithmetic).
  suite.checks.push_back(close_check(
      "distortion U(0.75)", logistic_utility(0.75, qd), 0.65, tol));
  suite.checks.push_back(close_check(
      "distortion U(0)", logistic_utility(0.0, qd), 0.9999997858684411, tol));
  suite.checks.push_back(close_check(
      "distortion U(1)", logistic_utility(1.0, qd), 0.3046849956469994, tol));
  suite.checks.push_back(
      close_check("scale U(0.8)", qs(0.8), 0.9975273768433653, tol));
  suite.checks.push_back(close_check("scale U(1.0)", qs(1.0), 0.5, tol));
  suite.checks.push_back(
      close_check("scale U(0)", qs(0.0), 4.5397868702434395e-05, tol));
  return suite;
}

SuiteResult validate_raycast(int configs) {
  SuiteResult suite{"raycast", {}};
  Rng rng(0x5eedc0de);

  int mismatched = 0;
  double worst_err = 0.0;
  int hits = 0, misses = 0;

  for (int done = 0; done < configs; ++done) {
    const int dims = (done % 2 == 0) ? 2 : 3;
    bool accepted = false;
    for (int attempt = 0; attempt < 400 && !accepted; ++attempt) {
      const double radius = rng.uniform(0.3, 1.5);
      const double step = radius / 10.0;
      const double d_max = rng.uniform(15.0, 30.0);

      Vec origin = Vec::Zero();
      for (int a = 0; a < dims; ++a) origin[a] = rng.uniform(-10.0, 10.0);

      const int n = 1 + static_cast<int>(rng.below(10));
      std::vector<Vec> spheres(static_cast<std::size_t>(n), Vec::Zero());
      for (auto& c : spheres) {
        for (int a = 0; a < dims; ++a) c[a] = rng.uniform(-20.0, 20.0);
      }

      // Alternate free aim with rays pointed near a sphere so both branches
      // of the comparison see real traffic.
      Vec dir = Vec::Zero();
      if (done % 4 < 2) {
        do {
          for (int a = 0; a < dims; ++a) dir[a] = rng.uniform(-1.0, 1.0);
        } while (dir.norm() < 0.05 || dir.norm() > 1.0);
      } else {
        const auto& pick = spheres[rng.below(spheres.size())];
        dir = pick - origin;
        for (int a = 0; a < dims; ++a) dir[a] += rng.uniform(-radius, radius);
        if (dir.norm() < 0.05) continue;
      }
      dir.normalize();

      // Margins: configurations near tangency, near the origin, or with an
      // entry hugging the range limit are ambiguous for a fixed-step walker
      // and are regenerated.
      bool ok = true;
      for (const Vec& c : spheres) {
        const Vec rel = c - origin;
        if (rel.norm() < 1.5 * radius) {
          ok = false;
          break;
        }
        const double along = rel.dot(dir);
        if (along <= 0.0) continue;
        const double lateral = (rel - along * dir).norm();
        if (std::abs(lateral - radius) < radius / 20.0) {
          ok = false;
          break;
        }
        if (lateral < radius) {
          const double entry =
              along - std::sqrt(radius * radius - lateral * lateral);
          if (entry > d_max - 2.0 * step && entry <= d_max + 2.0 * step) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      accepted = true;

      const RaycastHit fast = cast_ray(origin, dir, d_max, spheres, {}, {},
                                       radius);
      const auto slow = march_ray(origin, dir, d_max, spheres, radius, step);
      const bool fast_hit = fast.kind != HitKind::kNone;
      if (fast_hit != slow.has_value()) {
        ++mismatched;
      } else if (fast_hit) {
        ++hits;
        worst_err = std::max(worst_err, std::abs(fast.distance - *slow));
        if (std::abs(fast.distance - *slow) > radius / 5.0) ++mismatched;
      } else {
        ++misses;
      }
    }
    if (!accepted) {
      CheckResult c;
      c.name = "config generation";
      c.pass = false;
      c.detail = "margin rejection exhausted retries";
      suite.checks.push_back(c);
      return suite;
    }
  }

  CheckResult agreement;
  agreement.name = "oracle agreement (" + std::to_string(configs) + " configs)";
  agreement.pass = mismatched == 0;
  agreement.detail = std::to_string(hits) + " hits / " +
                     std::to_string(misses) + " misses, " +
                     std::to_string(mismatched) +
                     " disagreements, worst distance err " + fmt(worst_err);
  suite.checks.push_back(agreement);
  return suite;
}

SuiteResult validate_gp() {
  SuiteResult suite{"gp", {}};

  {
    // Noise-free interpolation must reproduce its own training data.
    GPModel model;
    model.sigma_n = 0.0;
    std::vector<Vec> xs;
    Eigen::VectorXd ys(40);
    for (int i = 0; i < 40; ++i) {
      const int gx = i % 8, gy = i / 8;
      xs.push_back(
          Vec(static_cast<double>(gx) * model.sigma_l,
              static_cast<double>(gy) * model.sigma_l, 0.0));
      ys[i] = static_cast<double>((i * 37) % 100) / 100.0;
    }
    const Eigen::VectorXd mu = posterior_mean(xs, xs, ys, model);
    const double worst = (mu - ys).cwiseAbs().maxCoeff();
    CheckResult c;
    c.name = "posterior identity (sigma_n = 0)";
    c.pass = worst <= 1e-8;
    c.detail = "max |mu - y| = " + fmt(worst);
    suite.checks.push_back(c);
  }

  {
    const Scenario scenario = builtin_scenario("free_space_2d");
    TrueWorld world(scenario);
    const auto& coords = world.target.coords();
    const Eigen::Index m = static_cast<Eigen::Index>(coords.size());

    // Probe poses sit where the sparse bundle can resolve every coordinate:
    // the whole face inside the field of view and close enough that the
    // inter-ray arc stays under a sphere diameter. Elsewhere the error is
    // dominated by which boundary sphere the ray lattice happens to clip,
    // which measures aliasing rather than interpolation quality.
    const Vec positions[] = {Vec(48.0, 35.0, 0.0), Vec(50.0, 36.0, 0.0),
                             Vec(52.0, 35.0, 0.0)};
    for (const Vec& p : positions) {
      Pose pose = Pose::look_at(p, world.ctx.aim, 2);
      // Sparse estimate: 64-ray bundle through the GP.
      RayBundle sparse = generate_ray_bundle(pose, scenario.camera.fov_h,
                                             scenario.camera.fov_v, 64, 1, 2);
      auto sparse_hits = cast_bundle_serial(
          pose, sparse, world.obstacles, world.target.occluder_coords(),
          coords, scenario.sensor.range, scenario.sphere_radius);
      Eigen::VectorXd est = estimate_visibility(world.field, world.target,
                                                sparse_hits, scenario.gp);

      // Dense binary truth from the capture bundle.
      RayBundle dense = generate_ray_bundle(
          pose, scenario.camera.fov_h, scenario.camera.fov_v,
          scenario.camera.capture_rays_h, scenario.camera.capture_rays_v, 2);
      auto dense_hits = cast_bundle_serial(
          pose, dense, world.obstacles, world.target.occluder_coords(),
          coords, scenario.sensor.range, scenario.sphere_radius);
      Eigen::VectorXd truth = Eigen::VectorXd::Zero(m);
      for (const auto& h : dense_hits) {
        if (h.kind == HitKind::kTarget) truth[h.target_index] = 1.0;
      }

      const double rmse = std::sqrt((est - truth).squaredNorm() /
                                    static_cast<double>(m));
      CheckResult c;
      c.name = "visibility RMSE from (" + fmt(p.x()) + ", " + fmt(p.y()) + ")";
      c.pass = rmse <= 0.15;
      c.detail = "rmse = " + fmt(rmse);
      suite.checks.push_back(c);
    }
  }
  return suite;
}

SuiteResult validate_pso(int seeds) {
  SuiteResult suite{"pso-error", {}};
  // The obstacle breaks the left/right symmetry of the score field, so the
  // exhaustive argmax is unique and the swarm has a single basin to find.
  const Scenario scenario = builtin_scenario("single_obstacle_2d");
  TrueWorld world(scenario);

  const Heatmap map = compute_heatmap(scenario, world.field, 1.0);
  const Vec reference = map.best().position;

  double sum = 0.0, sum_sq = 0.0;
  for (int seed = 1; seed <= seeds; ++seed) {
    Rng rng(static_cast<std::uint64_t>(seed) ^ rng_stream::kOptimizer);
    OptimizeResult res =
        optimize_viewpoint(world.ctx, scenario.swarm, rng, nullptr);
    const double err = (res.position - reference).norm();
    sum += err;
    sum_sq += err * err;
  }
  const double n = static_cast<double>(seeds);
  const double mean = sum / n;
  const double variance = std::max(0.0, sum_sq / n - mean * mean);

  CheckResult c;
  c.name = "mean viewpoint error vs exhaustive argmax";
  c.pass = mean <= 2.0;
  c.detail = fmt(mean) + " +/- " + fmt(std::sqrt(variance)) + " m over " +
             std::to_string(seeds) + " seeds (reference " +
             fmt(reference.x()) + ", " + fmt(reference.y()) + ")";
  suite.checks.push_back(c);
  return suite;
}

std::vector<std::string> validation_suites() {
  return {"utility", "raycast", "gp", "pso-error"};
}

std::vector<SuiteResult> run_validation(const std::string& name) {
  if (name == "utility") return {validate_utility()};
  if (name == "raycast") return {validate_raycast()};
  if (name == "gp") return {validate_gp()};
  if (name == "pso-error") return {validate_pso()};
  if (name == "all") {
    return {validate_utility(), validate_raycast(), validate_gp(),
            validate_pso()};
  }
  std::string known = "all";
  for (const auto& s : validation_suites()) known += ", " + s;
  throw std::invalid_argument("unknown suite '" + name + "' (valid: " + known +
                              ")");
}

}  // namespace photoplan
