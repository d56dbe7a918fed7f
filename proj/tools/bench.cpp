// Compares the OpenMP kernels against their serial twins: ray bundles,
// heatmap evaluation, and swarm scoring. Prints wall time and speedup, and
// verifies both paths produce identical results while at it.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "photoplan/builtin_scenarios.hpp"
#include "photoplan/metric.hpp"
#include "photoplan/oracle.hpp"
#include "photoplan/raycast.hpp"
#include "photoplan/swarm.hpp"

using namespace photoplan;

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(
             clock::now().time_since_epoch())
      .count();
}

template <typename F>
double time_ms(int repeats, F&& fn) {
  const double t0 = now_ms();
  for (int r = 0; r < repeats; ++r) fn();
  return (now_ms() - t0) / repeats;
}

void report(const char* name, double serial_ms, double parallel_ms,
            bool identical) {
  std::printf("%-18s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   "
              "results %s\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms,
              identical ? "identical" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  int repeats = 3;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--repeats") == 0 && i + 1 < argc) {
      repeats = std::atoi(argv[++i]);
    }
  }

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled at build time\n");
#endif

  const Scenario scenario = builtin_scenario("single_obstacle_2d");
  const TargetModel target = scenario.make_target();
  const CoverageField field(static_cast<int>(target.coords().size()));
  const std::vector<Vec> obstacles = scenario.true_obstacle_samples();
  const OccupancyGrid grid = scenario.true_occupancy();
  const NavMask mask(grid, scenario.mission.inflation,
                     target.body_cells(scenario.ws));
  const ViewContext ctx = ViewContext::make(
      scenario.ws, target, field, mask, obstacles, scenario.gp,
      scenario.camera, scenario.sensor.range, scenario.sphere_radius);

  {
    const Pose pose = Pose::look_at(Vec(50.0, 30.0, 0.0), ctx.aim, 2);
    const RayBundle bundle =
        generate_ray_bundle(pose, scenario.camera.fov_h,
                            scenario.camera.fov_v, 2001, 1, 2);
    std::vector<RaycastHit> a, b;
    const double serial = time_ms(repeats, [&] {
      a = cast_bundle_serial(pose, bundle, obstacles,
                             target.occluder_coords(), target.coords(),
                             scenario.sensor.range, scenario.sphere_radius);
    });
    const double parallel = time_ms(repeats, [&] {
      b = cast_bundle(pose, bundle, obstacles, target.occluder_coords(),
                      target.coords(), scenario.sensor.range,
                      scenario.sphere_radius);
    });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) {
      same = a[i].terminal == b[i].terminal && a[i].kind == b[i].kind &&
             a[i].distance == b[i].distance;
    }
    report("cast_bundle", serial, parallel, same);
  }

  {
    Heatmap a, b;
    const double serial = time_ms(
        1, [&] { a = compute_heatmap_serial(scenario, field, 2.0); });
    const double parallel =
        time_ms(1, [&] { b = compute_heatmap(scenario, field, 2.0); });
    bool same = a.best_index == b.best_index && a.cells.size() == b.cells.size();
    for (std::size_t i = 0; same && i < a.cells.size(); ++i) {
      same = a.cells[i].score == b.cells[i].score &&
             a.cells[i].feasible == b.cells[i].feasible;
    }
    report("heatmap", serial, parallel, same);
  }

  {
    const ScoreFunction score = [&](const Vec& p) {
      return evaluate_viewpoint(ctx, p).g;
    };
    SwarmConfig cfg = scenario.swarm;
    cfg.particles = 64;
    Swarm a, b;
    Rng rng_a(7), rng_b(7);
    swarm_initialize(a, cfg, scenario.ws, score, rng_a);
    swarm_initialize(b, cfg, scenario.ws, score, rng_b);
    const double serial =
        time_ms(repeats, [&] { swarm_score_serial(a, score); });
    const double parallel = time_ms(repeats, [&] { swarm_score(b, score); });
    bool same = true;
    for (std::size_t i = 0; i < a.particles.size(); ++i) {
      same = same && a.particles[i].score == b.particles[i].score;
    }
    report("swarm_score", serial, parallel, same);
  }

  return 0;
}
