#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "photoplan/builtin_scenarios.hpp"
#include "photoplan/swarm.hpp"

using namespace photoplan;

namespace {

Workspace unit_box() {
  return Workspace(2, Vec(0, 0, 0), Vec(10, 10, 0), 1.0);
}

ScoreFunction bowl(const Vec& optimum) {
  return [optimum](const Vec& p) { return -(p - optimum).squaredNorm(); };
}

Swarm manual_swarm(const Vec& position, const Vec& velocity, double score) {
  Swarm s;
  Particle p;
  p.position = position;
  p.velocity = velocity;
  p.score = score;
  s.particles.push_back(p);
  s.initialized = true;
  return s;
}

}  // namespace

TEST_CASE("zeroed coefficients freeze the swarm") {
  SwarmConfig cfg;
  cfg.inertia = 0.0;
  cfg.cognitive = 0.0;
  cfg.social = 0.0;
  Workspace ws = unit_box();
  Rng rng(3);

  Swarm s = manual_swarm(Vec(4, 5, 0), Vec(1.0, -0.5, 0), 1.0);
  pso_step(s, cfg, ws, rng);
  CHECK(s.particles[0].velocity.norm() == 0.0);
  CHECK((s.particles[0].position - Vec(4, 5, 0)).norm() == 0.0);
}

TEST_CASE("at the shared best only inertia remains") {
  SwarmConfig cfg;
  cfg.inertia = 0.5;
  Workspace ws = unit_box();
  Rng rng(3);

  // Single particle: after score absorption its position is both the
  // personal and the global best, so the attraction terms vanish.
  Swarm s = manual_swarm(Vec(5, 5, 0), Vec(2, 0, 0), 1.0);
  pso_step(s, cfg, ws, rng);
  CHECK(s.particles[0].velocity.x() == doctest::Approx(1.0));
  CHECK(s.particles[0].velocity.y() == doctest::Approx(0.0));
  CHECK(s.particles[0].position.x() == doctest::Approx(6.0));
}

TEST_CASE("swarm converges on a quadratic bowl") {
  const Vec optimum(3, 4, 0);
  const Workspace ws = unit_box();
  SwarmConfig cfg;  // defaults: 20 particles, w=0.7, c1=c2=1.5
  cfg.iterations = 100;

  int good = 0;
  for (int seed = 1; seed <= 100; ++seed) {
    Rng rng(static_cast<std::uint64_t>(seed));
    Swarm s;
    swarm_initialize(s, cfg, ws, [](const Vec&) { return 1.0; }, rng);
    const ScoreFunction score = bowl(optimum);
    for (int it = 0; it < cfg.iterations; ++it) {
      swarm_score(s, score);
      pso_step(s, cfg, ws, rng);
    }
    swarm_score(s, score);
    swarm_absorb_scores(s);
    if ((s.global_best_position - optimum).norm() <= 0.05) ++good;
  }
  CHECK(good >= 95);
}

TEST_CASE("global best never degrades between iterations") {
  const Workspace ws = unit_box();
  SwarmConfig cfg;
  Rng rng(17);
  Swarm s;
  swarm_initialize(s, cfg, ws, [](const Vec&) { return 1.0; }, rng);
  const ScoreFunction score = bowl(Vec(7, 2, 0));
  double previous = kInfeasibleScore;
  for (int it = 0; it < 40; ++it) {
    swarm_score(s, score);
    pso_step(s, cfg, ws, rng);
    CHECK(s.global_best_score >= previous);
    previous = s.global_best_score;
  }
}

TEST_CASE("particle motion respects the velocity cap") {
  const Workspace ws = unit_box();
  SwarmConfig cfg;
  cfg.velocity_cap_fraction = 0.05;
  const double cap = cfg.velocity_cap_fraction * ws.diagonal();
  Rng rng(29);
  Swarm s;
  swarm_initialize(s, cfg, ws, [](const Vec&) { return 1.0; }, rng);
  const ScoreFunction score = bowl(Vec(9, 9, 0));
  std::vector<Vec> before(s.particles.size());
  for (int it = 0; it < 30; ++it) {
    for (std::size_t i = 0; i < s.particles.size(); ++i) {
      before[i] = s.particles[i].position;
    }
    swarm_score(s, score);
    pso_step(s, cfg, ws, rng);
    for (std::size_t i = 0; i < s.particles.size(); ++i) {
      CHECK((s.particles[i].position - before[i]).norm() <= cap + 1e-9);
      CHECK(ws.contains(s.particles[i].position));
    }
  }
}

TEST_CASE("identical seeds give identical trajectories") {
  const Workspace ws = unit_box();
  SwarmConfig cfg;
  auto run = [&] {
    Rng rng(99);
    Swarm s;
    swarm_initialize(s, cfg, ws, [](const Vec&) { return 1.0; }, rng);
    const ScoreFunction score = bowl(Vec(2, 8, 0));
    for (int it = 0; it < 25; ++it) {
      swarm_score(s, score);
      pso_step(s, cfg, ws, rng);
    }
    return s;
  };
  Swarm a = run();
  Swarm b = run();
  REQUIRE(a.particles.size() == b.particles.size());
  for (std::size_t i = 0; i < a.particles.size(); ++i) {
    CHECK(a.particles[i].position == b.particles[i].position);
    CHECK(a.particles[i].velocity == b.particles[i].velocity);
  }
  CHECK(a.global_best_position == b.global_best_position);
  CHECK(a.global_best_score == b.global_best_score);
}

TEST_CASE("parallel scoring matches the serial reference") {
  const Workspace ws = unit_box();
  SwarmConfig cfg;
  cfg.particles = 50;
  Rng rng(55);
  Swarm par;
  swarm_initialize(par, cfg, ws, [](const Vec&) { return 1.0; }, rng);
  Swarm ser = par;
  const ScoreFunction score = bowl(Vec(1, 1, 0));
  swarm_score(par, score);
  swarm_score_serial(ser, score);
  for (std::size_t i = 0; i < par.particles.size(); ++i) {
    CHECK(par.particles[i].score == ser.particles[i].score);
  }
}

TEST_CASE("initialization places only feasible particles") {
  const Workspace ws = unit_box();
  SwarmConfig cfg;
  Rng rng(7);
  // Feasible = left half only.
  Swarm s;
  swarm_initialize(s, cfg, ws,
                   [](const Vec& p) {
                     return p.x() < 5.0 ? 1.0 : kInfeasibleScore;
                   },
                   rng);
  REQUIRE(s.particles.size() == 20);
  for (const Particle& p : s.particles) {
    CHECK(p.position.x() < 5.0);
    CHECK(p.velocity.norm() == 0.0);
    CHECK(p.best_score == kInfeasibleScore);  // bests unset until scoring
  }
}

TEST_CASE("impossible initialization is reported") {
  const Workspace ws = unit_box();
  SwarmConfig cfg;
  cfg.init_retries = 20;
  Rng rng(7);
  Swarm s;
  CHECK_THROWS_AS(
      swarm_initialize(s, cfg, ws,
                       [](const Vec&) { return kInfeasibleScore; }, rng),
      std::runtime_error);
}

TEST_CASE("config validation rejects out-of-range coefficients") {
  SwarmConfig bad;
  bad.inertia = 1.0;  // must stay strictly below 1
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = SwarmConfig{};
  bad.inertia = -0.1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = SwarmConfig{};
  bad.cognitive = -1.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = SwarmConfig{};
  bad.particles = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_NOTHROW(SwarmConfig{}.validate());
}

TEST_CASE("viewpoint optimization returns a feasible scored pose") {
  Scenario s = builtin_scenario("free_space_2d");
  s.swarm.iterations = 15;  // enough for a smoke check
  TargetModel target = s.make_target();
  CoverageField field(static_cast<int>(target.coords().size()));
  OccupancyGrid grid(s.ws);
  NavMask mask(grid, s.mission.inflation, target.body_cells(s.ws));
  ViewContext ctx = ViewContext::make(s.ws, target, field, mask, {}, s.gp,
                                      s.camera, s.sensor.range,
                                      s.sphere_radius);

  Rng rng(5);
  OptimizeResult res = optimize_viewpoint(ctx, s.swarm, rng);
  CHECK(res.score.feasible);
  CHECK(res.score.g > 0.0);
  CHECK(s.ws.contains(res.position));
  CHECK_FALSE(mask.blocked(res.position));
  CHECK(res.evaluations > 0);
  CHECK(res.eval_ms.size() == static_cast<std::size_t>(res.evaluations));

  // Same seed, same answer; the optimizer draws nothing else.
  Rng rng2(5);
  OptimizeResult res2 = optimize_viewpoint(ctx, s.swarm, rng2);
  CHECK(res.position == res2.position);
  CHECK(res.score.g == res2.score.g);
}

TEST_CASE("a saturated field still yields a feasible zero-gain pose") {
  Scenario s = builtin_scenario("free_space_2d");
  s.swarm.iterations = 5;
  TargetModel target = s.make_target();
  CoverageField field(static_cast<int>(target.coords().size()));
  field.mu.setOnes();
  OccupancyGrid grid(s.ws);
  NavMask mask(grid, s.mission.inflation, target.body_cells(s.ws));
  ViewContext ctx = ViewContext::make(s.ws, target, field, mask, {}, s.gp,
                                      s.camera, s.sensor.range,
                                      s.sphere_radius);
  Rng rng(8);
  OptimizeResult res = optimize_viewpoint(ctx, s.swarm, rng);
  CHECK(res.score.feasible);
  CHECK(res.score.g == doctest::Approx(0.0));
}
