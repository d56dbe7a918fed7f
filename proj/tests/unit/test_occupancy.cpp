#include <doctest.h>

#include <array>
#include <stdexcept>
#include <vector>

#include "photoplan/occupancy.hpp"
#include "photoplan/rng.hpp"
#include "photoplan/sensing.hpp"

using namespace photoplan;

namespace {

Workspace small_ws() { return Workspace(2, Vec(0, 0, 0), Vec(20, 20, 0), 1.0); }

}  // namespace

TEST_CASE("log-odds to probability conversion") {
  CHECK(occupancy_probability(0.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(occupancy_probability(3.5) ==
        doctest::Approx(0.9706877692486436).epsilon(1e-12));
  CHECK(occupancy_probability(-2.0) ==
        doctest::Approx(0.11920292202211755).epsilon(1e-12));
}

TEST_CASE("hit and miss updates apply the default increments") {
  OccupancyGrid grid(small_ws());
  std::size_t idx = grid.workspace().linear_index({5, 5, 0});
  CHECK(grid.logodds(idx) == 0.0);

  grid.add_hit(idx);
  CHECK(grid.logodds(idx) == doctest::Approx(0.85));
  CHECK(grid.occupied(idx));

  std::size_t other = grid.workspace().linear_index({6, 5, 0});
  grid.add_miss(other);
  CHECK(grid.logodds(other) == doctest::Approx(-0.4));
  CHECK_FALSE(grid.occupied(other));
}

TEST_CASE("updates clamp at the saturation bounds") {
  OccupancyGrid grid(small_ws());
  std::size_t idx = grid.workspace().linear_index({3, 3, 0});

  grid.set_logodds(idx, 3.5);
  grid.add_hit(idx);
  CHECK(grid.logodds(idx) == 3.5);  // hit at l_max stays at l_max

  grid.set_logodds(idx, -2.0);
  grid.add_miss(idx);
  CHECK(grid.logodds(idx) == -2.0);

  // set_logodds itself clamps
  grid.set_logodds(idx, 100.0);
  CHECK(grid.logodds(idx) == 3.5);
  grid.set_logodds(idx, -100.0);
  CHECK(grid.logodds(idx) == -2.0);
}

TEST_CASE("random update sequences never escape the clamp bounds") {
  OccupancyGrid grid(small_ws());
  const OccupancyParams& p = grid.params();
  Rng rng(7);
  for (int i = 0; i < 5000; ++i) {
    std::size_t idx = rng.below(grid.workspace().cell_count());
    if (rng.uniform01() < 0.5) {
      grid.add_hit(idx);
    } else {
      grid.add_miss(idx);
    }
  }
  for (double v : grid.raw()) {
    CHECK(v >= p.l_min);
    CHECK(v <= p.l_max);
  }
}

TEST_CASE("collision check against occupied cell centers") {
  OccupancyGrid grid(small_ws());
  CHECK_FALSE(is_colliding(grid, Vec(10, 10, 0), 5.0));  // all-free grid

  // Occupy the cell whose center is (5.5, 5.5).
  grid.set_logodds(grid.workspace().linear_index({5, 5, 0}), 3.5);
  CHECK(is_colliding(grid, Vec(5.5, 5.5, 0), 0.0));

  // Center 1.4 m away, inflation 1.0: clear.
  CHECK_FALSE(is_colliding(grid, Vec(6.9, 5.5, 0), 1.0));
  CHECK(is_colliding(grid, Vec(6.4, 5.5, 0), 1.0));
}

TEST_CASE("cell walk visits the straight corridor in order") {
  Workspace ws = small_ws();
  std::vector<std::array<int, 3>> visited;
  walk_cells(ws, Vec(0.5, 0.5, 0), Vec(4.5, 0.5, 0),
             [&](const std::array<int, 3>& c) {
               visited.push_back(c);
               return true;
             });
  REQUIRE(visited.size() == 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(visited[i] == std::array<int, 3>{i, 0, 0});
  }
}

TEST_CASE("cell walk ends at the goal cell and honors early stop") {
  Workspace ws = small_ws();
  std::vector<std::array<int, 3>> visited;
  walk_cells(ws, Vec(1.5, 1.5, 0), Vec(6.5, 4.5, 0),
             [&](const std::array<int, 3>& c) {
               visited.push_back(c);
               return true;
             });
  REQUIRE(!visited.empty());
  CHECK(visited.front() == ws.cell_of(Vec(1.5, 1.5, 0)));
  CHECK(visited.back() == ws.cell_of(Vec(6.5, 4.5, 0)));
  // Consecutive cells differ by one step on at most each axis.
  for (std::size_t i = 1; i < visited.size(); ++i) {
    int dx = std::abs(visited[i][0] - visited[i - 1][0]);
    int dy = std::abs(visited[i][1] - visited[i - 1][1]);
    CHECK(dx + dy == 1);  // Amanatides-Woo advances one axis at a time
  }

  int count = 0;
  walk_cells(ws, Vec(1.5, 1.5, 0), Vec(6.5, 4.5, 0),
             [&](const std::array<int, 3>&) { return ++count < 3; });
  CHECK(count == 3);
}

TEST_CASE("degenerate zero-length walk visits exactly the origin cell") {
  Workspace ws = small_ws();
  int count = 0;
  walk_cells(ws, Vec(2.5, 2.5, 0), Vec(2.5, 2.5, 0),
             [&](const std::array<int, 3>& c) {
               ++count;
               CHECK(c == std::array<int, 3>{2, 2, 0});
               return true;
             });
  CHECK(count == 1);
}

TEST_CASE("navigation mask dilates occupied cells by the safety margin") {
  OccupancyGrid grid(small_ws());
  grid.set_logodds(grid.workspace().linear_index({10, 10, 0}), 3.5);

  NavMask mask(grid, 1.5);
  CHECK(mask.blocked(Vec(10.5, 10.5, 0)));  // the occupied cell itself
  CHECK(mask.blocked(Vec(11.5, 10.5, 0)));  // 1 m away, within margin
  // Effective dilation is inflation plus half a cell diagonal (~2.21 m for
  // 1 m cells), so cells ~3 m out are free again.
  CHECK_FALSE(mask.blocked(Vec(13.5, 10.5, 0)));
  CHECK_FALSE(mask.blocked(Vec(4.5, 4.5, 0)));

  // Outside the workspace counts as blocked.
  CHECK(mask.blocked(Vec(-1.0, 5.0, 0)));
}

TEST_CASE("segment checks respect the mask") {
  OccupancyGrid grid(small_ws());
  for (int y = 0; y < 20; ++y) {
    if (y == 17) continue;  // keep one slot so the corridor exists
    grid.set_logodds(grid.workspace().linear_index({10, y, 0}), 3.5);
  }
  NavMask mask(grid, 0.0);
  CHECK(mask.segment_clear(Vec(2.5, 2.5, 0), Vec(2.5, 18.5, 0)));
  CHECK_FALSE(mask.segment_clear(Vec(2.5, 2.5, 0), Vec(18.5, 2.5, 0)));
  CHECK_FALSE(mask.segment_clear(Vec(2.5, 2.5, 0), Vec(25.0, 2.5, 0)));
}

TEST_CASE("extra blocked cells behave like occupied cells in the mask") {
  OccupancyGrid grid(small_ws());
  std::size_t idx = grid.workspace().linear_index({4, 4, 0});
  NavMask mask(grid, 0.0, {idx});
  CHECK(mask.blocked_cell({4, 4, 0}));
  CHECK_FALSE(mask.blocked_cell({8, 8, 0}));
}

TEST_CASE("scan integration marks terminals and frees the corridor") {
  OccupancyGrid grid(small_ws());
  const Workspace& ws = grid.workspace();

  RaycastHit hit;
  hit.terminal = Vec(8.5, 2.5, 0);
  hit.distance = 8.0;
  hit.kind = HitKind::kObstacle;
  integrate_depth_scan(grid, Vec(0.5, 2.5, 0), {hit});

  CHECK(grid.logodds(ws.linear_index({8, 2, 0})) == doctest::Approx(0.85));
  for (int x = 0; x < 8; ++x) {
    CHECK(grid.logodds(ws.linear_index({x, 2, 0})) == doctest::Approx(-0.4));
  }
  CHECK(grid.logodds(ws.linear_index({9, 2, 0})) == 0.0);  // beyond terminal
}

TEST_CASE("target returns never mark the terminal cell occupied") {
  OccupancyGrid grid(small_ws());
  const Workspace& ws = grid.workspace();

  RaycastHit hit;
  hit.terminal = Vec(12.5, 3.5, 0);
  hit.distance = 12.0;
  hit.kind = HitKind::kTarget;
  hit.target_index = 0;
  integrate_depth_scan(grid, Vec(0.5, 3.5, 0), {hit});

  CHECK(grid.logodds(ws.linear_index({12, 3, 0})) == 0.0);
  CHECK(grid.logodds(ws.linear_index({5, 3, 0})) == doctest::Approx(-0.4));

  // Occluder returns (inactive target faces) are equally exempt.
  hit.kind = HitKind::kOccluder;
  integrate_depth_scan(grid, Vec(0.5, 3.5, 0), {hit});
  CHECK(grid.logodds(ws.linear_index({12, 3, 0})) == 0.0);
}

TEST_CASE("max-range returns free the terminal cell too") {
  OccupancyGrid grid(small_ws());
  const Workspace& ws = grid.workspace();

  RaycastHit hit;
  hit.terminal = Vec(15.5, 9.5, 0);
  hit.distance = 15.0;
  hit.kind = HitKind::kNone;
  integrate_depth_scan(grid, Vec(0.5, 9.5, 0), {hit});
  CHECK(grid.logodds(ws.linear_index({15, 9, 0})) == doctest::Approx(-0.4));
}

TEST_CASE("rays leaving the grid are clipped, terminal unmarked") {
  OccupancyGrid grid(small_ws());
  const Workspace& ws = grid.workspace();

  RaycastHit hit;
  hit.terminal = Vec(30.0, 5.5, 0);  // outside the 20 m workspace
  hit.distance = 29.5;
  hit.kind = HitKind::kObstacle;
  integrate_depth_scan(grid, Vec(0.5, 5.5, 0), {hit});

  // Everything inside the grid along the ray becomes free; nothing is hit.
  CHECK(grid.logodds(ws.linear_index({10, 5, 0})) == doctest::Approx(-0.4));
  for (std::size_t i = 0; i < ws.cell_count(); ++i) {
    CHECK(grid.logodds(i) <= 0.0);
  }
}

TEST_CASE("scan origin outside the workspace is a domain error") {
  OccupancyGrid grid(small_ws());
  RaycastHit hit;
  hit.terminal = Vec(5.5, 5.5, 0);
  CHECK_THROWS_AS(integrate_depth_scan(grid, Vec(-5, 5, 0), {hit}),
                  std::domain_error);
}

TEST_CASE("depth sensor rejects poses outside the workspace") {
  Workspace ws = small_ws();
  TargetModel target =
      TargetModel::box(Vec(10, 15, 0), Vec(4, 2, 0), 1.0, 2, {"south"});
  Pose pose = Pose::look_at(Vec(-3, 10, 0), Vec(10, 15, 0), 2);
  SensorParams sensor;
  CHECK_THROWS_AS(
      simulate_depth_sensor(ws, pose, sensor, {}, target, 0.75),
      std::domain_error);
}

TEST_CASE("depth sensor in an empty world returns max-range terminals") {
  Workspace ws = small_ws();
  TargetModel target;  // no coordinates at all
  Pose pose = Pose::look_at(Vec(10, 10, 0), Vec(20, 10, 0), 2);
  SensorParams sensor;
  sensor.range = 12.0;
  sensor.rays_h = 21;
  auto hits = simulate_depth_sensor(ws, pose, sensor, {}, target, 0.75);
  REQUIRE(hits.size() == 21);
  for (const RaycastHit& h : hits) {
    CHECK(h.kind == HitKind::kNone);
    CHECK(h.distance == doctest::Approx(12.0));
  }
}

TEST_CASE("grid evolution is deterministic for identical scan sequences") {
  auto run = [] {
    OccupancyGrid grid(small_ws());
    TargetModel target =
        TargetModel::box(Vec(10, 15, 0), Vec(4, 2, 0), 1.0, 2, {"south"});
    std::vector<Vec> obstacle = box_surface_samples(
        Box{Vec(14, 8, 0), Vec(1, 1, 0)}, 0.5, 2);
    SensorParams sensor;
    for (int i = 0; i < 4; ++i) {
      Pose pose = Pose::look_at(Vec(3.0 + i, 3.0, 0), Vec(10, 15, 0), 2);
      auto hits = simulate_depth_sensor(grid.workspace(), pose, sensor,
                                        obstacle, target, 0.75);
      integrate_depth_scan(grid, pose.position, hits);
    }
    return grid.raw();
  };
  CHECK(run() == run());
}
