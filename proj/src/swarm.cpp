#include "photoplan/swarm.hpp"

#include <chrono>
#include <cstdint>
#include <stdexcept>

namespace photoplan {

void SwarmConfig::validate() const {
  if (particles < 1) {
    throw std::invalid_argument("pso: needs at least one particle");
  }
  if (iterations < 0 || warm_iterations < 0) {
    throw std::invalid_argument("pso: iteration counts must be >= 0");
  }
  if (inertia < 0.0 || inertia >= 1.0) {
    throw std::invalid_argument("pso: inertia must satisfy 0 <= w < 1");
  }
  if (cognitive < 0.0 || social < 0.0) {
    throw std::invalid_argument("pso: acceleration coefficients must be >= 0");
  }
  if (velocity_cap_fraction <= 0.0) {
    throw std::invalid_argument("pso: velocity cap must be positive");
  }
}

void swarm_initialize(Swarm& swarm, const SwarmConfig& cfg,
                      const Workspace& ws, const ScoreFunction& feasible,
                      Rng& rng) {
  cfg.validate();
  swarm.particles.assign(cfg.particles, Particle{});
  swarm.global_best_score = kInfeasibleScore;
  swarm.global_best_position = Vec::Zero();
  for (auto& particle : swarm.particles) {
    bool placed = false;
    for (int attempt = 0; attempt < cfg.init_retries; ++attempt) {
      Vec p = Vec::Zero();
      for (int a = 0; a < ws.dims; ++a) {
        p[a] = rng.uniform(ws.lower[a], ws.upper[a]);
      }
      if (feasible(p) > kInfeasibleScore) {
        particle.position = p;
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw std::runtime_error(
          "pso: no feasible particle position after max retries");
    }
    particle.velocity = Vec::Zero();
    particle.best_position = particle.position;
    particle.best_score = kInfeasibleScore;
    particle.score = kInfeasibleScore;
  }
  // Anchor the social term somewhere sensible until a particle scores.
  swarm.global_best_position = swarm.particles.front().position;
  swarm.initialized = true;
}

void swarm_score_serial(Swarm& swarm, const ScoreFunction& score) {
  for (auto& particle : swarm.particles) {
    particle.score = score(particle.position);
  }
}

void swarm_score(Swarm& swarm, const ScoreFunction& score) {
  const auto n = static_cast<std::int64_t>(swarm.particles.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    swarm.particles[i].score = score(swarm.particles[i].position);
  }
}

void swarm_absorb_scores(Swarm& swarm) {
  for (auto& particle : swarm.particles) {
    if (particle.score > particle.best_score) {
      particle.best_score = particle.score;
      particle.best_position = particle.position;
    }
    if (particle.best_score > swarm.global_best_score) {
      swarm.global_best_score = particle.best_score;
      swarm.global_best_position = particle.best_position;
    }
  }
}

void pso_step(Swarm& swarm, const SwarmConfig& cfg, const Workspace& ws,
              Rng& rng) {
  cfg.validate();
  if (!swarm.initialized) {
    throw std::logic_error("pso_step: swarm not initialized");
  }
  swarm_absorb_scores(swarm);
  const double cap = cfg.velocity_cap_fraction * ws.diagonal();
  for (auto& particle : swarm.particles) {
    const double r1 = rng.uniform01();
    const double r2 = rng.uniform01();
    Vec v = cfg.inertia * particle.velocity +
            cfg.cognitive * r1 * (particle.best_position - particle.position) +
            cfg.social * r2 * (swarm.global_best_position - particle.position);
    const double speed = v.norm();
    if (speed > cap) v *= cap / speed;
    Vec p = particle.position + v;
    for (int a = 0; a < ws.dims; ++a) {
      p[a] = std::min(std::max(p[a], ws.lower[a]), ws.upper[a]);
    }
    if (ws.dims == 2) p.z() = 0.0;
    particle.velocity = v;
    particle.position = p;
  }
}

OptimizeResult optimize_viewpoint(const ViewContext& ctx,
                                  const SwarmConfig& cfg, Rng& rng,
                                  Swarm* warm) {
  cfg.validate();
  OptimizeResult result;

  Swarm local;
  Swarm& swarm = warm != nullptr ? *warm : local;
  const ScoreFunction feasibility = [&](const Vec& p) {
    return ctx.ws->contains(p) && !ctx.nav->blocked(p) ? 0.0
                                                       : kInfeasibleScore;
  };
  const ScoreFunction score = [&](const Vec& p) {
    const auto t0 = std::chrono::steady_clock::now();
    const ViewScore s = evaluate_viewpoint(ctx, p);
    const auto t1 = std::chrono::steady_clock::now();
#pragma omp critical(photoplan_eval_timing)
    {
      result.eval_ms.push_back(
          std::chrono::duration<double, std::milli>(t1 - t0).count());
      ++result.evaluations;
    }
    return s.g;
  };

  int iterations = cfg.iterations;
  if (swarm.initialized && warm != nullptr) {
    // Warm start: keep positions and velocities, drop remembered bests (the
    // objective has changed since they were scored).
    for (auto& particle : swarm.particles) {
      particle.best_position = particle.position;
      particle.best_score = kInfeasibleScore;
      particle.score = kInfeasibleScore;
    }
    swarm.global_best_score = kInfeasibleScore;
    swarm.global_best_position = swarm.particles.front().position;
    iterations = cfg.warm_iterations;
  } else {
    swarm_initialize(swarm, cfg, *ctx.ws, feasibility, rng);
  }

  swarm_score(swarm, score);
  for (int it = 0; it < iterations; ++it) {
    pso_step(swarm, cfg, *ctx.ws, rng);
    swarm_score(swarm, score);
  }
  swarm_absorb_scores(swarm);

  result.position = swarm.global_best_position;
  result.score = evaluate_viewpoint(ctx, result.position);
  result.pose = Pose::look_at(result.position, ctx.aim, ctx.ws->dims);
  return result;
}

}  // namespace photoplan
