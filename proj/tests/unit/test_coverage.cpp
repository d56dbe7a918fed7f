#include <doctest.h>

#include <cmath>
#include <vector>

#include "photoplan/coverage_ops.hpp"
#include "photoplan/metric.hpp"
#include "photoplan/raycast.hpp"
#include "photoplan/target.hpp"

using namespace photoplan;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct FaceWorld {
  TargetModel target;
  CoverageField field;
  GPModel gp;

  FaceWorld()
      : target(TargetModel::box(Vec(50, 60, 0), Vec(30, 15, 0), 1.0, 2,
                                {"south"})),
        field(static_cast<int>(target.coords().size())) {}

  std::vector<RaycastHit> capture_from(const Vec& position,
                                       std::span<const Vec> obstacles,
                                       double radius, int rays = 721) const {
    Pose pose = Pose::look_at(position, Vec(50, 52.5, 0), 2);
    RayBundle bundle = generate_ray_bundle(pose, kPi / 2, kPi / 2, rays, 1, 2);
    return cast_bundle(pose, bundle, obstacles, target.occluder_coords(),
                       target.coords(), 25.0, radius);
  }
};

}  // namespace

TEST_CASE("samples carry the hit labels and the local prior") {
  FaceWorld w;
  w.field.mu[5] = 0.75;
  auto hits = w.capture_from(Vec(50, 32, 0), {}, 0.3, 61);
  auto samples = collect_samples(hits, w.target, w.field, w.gp);
  REQUIRE(!samples.empty());
  bool saw_hot_prior = false;
  for (const CoverageSample& s : samples) {
    CHECK((s.y == 0.0 || s.y == 1.0));
    if (s.y == 1.0) {
      // Target samples sit on the face sphere surfaces.
      CHECK(w.target.aabb().distance(s.x, 2) <= 0.3 + 1e-9);
      if (std::abs(s.prior - 0.75) < 1e-12) saw_hot_prior = true;
    } else {
      // Misses are only kept where their kernel column matters.
      CHECK(w.target.aabb().distance(s.x, 2) <= 4.0 * w.gp.sigma_l + 1e-9);
    }
  }
  CHECK(saw_hot_prior);
}

TEST_CASE("misses alone contribute no gain") {
  FaceWorld w;
  // Face behind the pose: every ray flies into empty space.
  Pose pose = Pose::look_at(Vec(50, 32, 0), Vec(50, 0, 0), 2);
  RayBundle bundle = generate_ray_bundle(pose, kPi / 2, kPi / 2, 61, 1, 2);
  auto hits = cast_bundle(pose, bundle, {}, {}, {}, 25.0, 0.3);
  CHECK(expected_gain(w.field, w.target, hits, w.gp) == 0.0);

  Eigen::VectorXd est = estimate_visibility(w.field, w.target, hits, w.gp);
  CHECK((est - w.field.mu).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("a saturated field cannot gain anything") {
  FaceWorld w;
  w.field.mu.setOnes();
  auto hits = w.capture_from(Vec(50, 32, 0), {}, 0.3);
  CHECK(expected_gain(w.field, w.target, hits, w.gp) == 0.0);
}

TEST_CASE("estimates are bounded by the belief range and the prior") {
  FaceWorld w;
  for (int j = 0; j < w.field.mu.size(); j += 3) w.field.mu[j] = 0.4;
  auto hits = w.capture_from(Vec(44, 34, 0), {}, 0.3, 61);
  Eigen::VectorXd est = estimate_visibility(w.field, w.target, hits, w.gp);
  REQUIRE(est.size() == w.field.mu.size());
  for (int j = 0; j < est.size(); ++j) {
    CHECK(est[j] >= w.field.mu[j] - 1e-12);  // gain is one-sided
    CHECK(est[j] <= 1.0 + 1e-12);
  }
  CHECK(expected_gain(w.field, w.target, hits, w.gp) ==
        doctest::Approx((est - w.field.mu).sum()).epsilon(1e-9));
}

TEST_CASE("dense capture of an unobstructed face gains almost everything") {
  FaceWorld w;
  const double m_f = static_cast<double>(w.target.coords().size());
  auto hits = w.capture_from(Vec(50, 31.9, 0), {}, 0.3);
  double gain = expected_gain(w.field, w.target, hits, w.gp);
  CHECK(gain >= 0.9 * m_f);
  CHECK(gain <= 1.1 * m_f);
}

TEST_CASE("committing a capture raises the belief monotonically") {
  FaceWorld w;
  Eigen::VectorXd before = w.field.mu;
  for (double x : {42.0, 50.0, 58.0}) {
    auto hits = w.capture_from(Vec(x, 33, 0), {}, 0.3);
    commit_capture(w.field, w.target, hits, w.gp);
    for (int j = 0; j < w.field.mu.size(); ++j) {
      CHECK(w.field.mu[j] >= before[j] - 1e-12);
      CHECK(w.field.mu[j] <= 1.0);
      CHECK(w.field.mu[j] >= 0.0);
    }
    before = w.field.mu;
  }
  CHECK(w.field.mean() >= 0.9);
  CHECK(w.field.sample_x.size() == w.field.sample_y.size());
  CHECK(!w.field.sample_x.empty());
}

TEST_CASE("recapturing a fully captured region changes nothing") {
  FaceWorld w;
  w.field.mu.setOnes();
  Eigen::VectorXd before = w.field.mu;
  auto hits = w.capture_from(Vec(50, 32, 0), {}, 0.3);
  commit_capture(w.field, w.target, hits, w.gp);
  CHECK((w.field.mu - before).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("occluded coordinates stay uncaptured after a commit") {
  FaceWorld w;
  // Solid wall shadowing the right half of the face: overlapping spheres
  // from x = 50 to 70 at y = 48, between the pose and the face.
  std::vector<Vec> wall;
  for (double x = 50.0; x <= 70.0; x += 0.5) {
    wall.emplace_back(x, 48.0, 0);
  }
  auto hits = w.capture_from(Vec(50, 31, 0), wall, 0.75);
  commit_capture(w.field, w.target, hits, w.gp);

  double visible_sum = 0.0;
  int visible_n = 0;
  for (int j = 0; j < w.field.mu.size(); ++j) {
    const double x = w.target.coords()[j].x();
    if (x <= 47.0) {
      visible_sum += w.field.mu[j];
      ++visible_n;
    } else if (x >= 53.0) {
      // Well inside the shadow: GP bleed from the lit half has decayed.
      CHECK(w.field.mu[j] < 0.5);
    }
  }
  REQUIRE(visible_n > 0);
  CHECK(visible_sum / visible_n > 0.8);
}

TEST_CASE("stride subsampling is deterministic and bounded") {
  auto all = stride_subsample(10, 20);
  REQUIRE(all.size() == 10);
  for (int i = 0; i < 10; ++i) CHECK(all[i] == i);

  auto capped = stride_subsample(1000, 64);
  CHECK(capped.size() <= 64);
  CHECK(capped.size() >= 32);  // cap is a bound, not a quota to pad to
  for (std::size_t i = 1; i < capped.size(); ++i) {
    CHECK(capped[i] > capped[i - 1]);
    CHECK(capped[i] < 1000);
  }
  CHECK(stride_subsample(1000, 64) == capped);
  CHECK(stride_subsample(0, 64).empty());
}

TEST_CASE("sample cap keeps oversized casts solvable") {
  FaceWorld w;
  auto hits = w.capture_from(Vec(50, 32, 0), {}, 0.3);
  // Tiny cap: still returns a bounded, monotone estimate.
  Eigen::VectorXd est = estimate_visibility(w.field, w.target, hits, w.gp, 40);
  for (int j = 0; j < est.size(); ++j) {
    CHECK(est[j] >= 0.0);
    CHECK(est[j] <= 1.0);
  }
  CHECK(est.sum() > 0.0);
}
