#include <doctest.h>

#include <stdexcept>

#include "photoplan/workspace.hpp"

using namespace photoplan;

TEST_CASE("workspace shape is ceil(extent / resolution) per axis") {
  Workspace ws(2, Vec(0, 0, 0), Vec(100, 100, 0), 1.0);
  CHECK(ws.shape[0] == 100);
  CHECK(ws.shape[1] == 100);
  CHECK(ws.shape[2] == 1);
  CHECK(ws.cell_count() == 10000);

  Workspace odd(2, Vec(0, 0, 0), Vec(10.5, 3.2, 0), 1.0);
  CHECK(odd.shape[0] == 11);
  CHECK(odd.shape[1] == 4);

  Workspace cube(3, Vec(0, 0, 0), Vec(8, 8, 8), 0.5);
  CHECK(cube.shape[0] == 16);
  CHECK(cube.shape[2] == 16);
  CHECK(cube.cell_count() == 16 * 16 * 16);
}

TEST_CASE("workspace constructor rejects invalid arguments") {
  CHECK_THROWS_AS(Workspace(4, Vec(0, 0, 0), Vec(1, 1, 1), 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(Workspace(2, Vec(0, 0, 0), Vec(1, 1, 0), 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(Workspace(2, Vec(0, 0, 0), Vec(1, 1, 0), -1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(Workspace(2, Vec(0, 5, 0), Vec(1, 5, 0), 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(Workspace(3, Vec(0, 0, 2), Vec(1, 1, 1), 1.0),
                  std::invalid_argument);
}

TEST_CASE("2D workspaces pin z to a single zero-height layer") {
  Workspace ws(2, Vec(0, 0, -3), Vec(10, 10, 7), 1.0);
  CHECK(ws.lower.z() == 0.0);
  CHECK(ws.upper.z() == 0.0);
  CHECK(ws.shape[2] == 1);
  CHECK(ws.cell_center({4, 4, 0}).z() == 0.0);
}

TEST_CASE("containment is closed on the boundary") {
  Workspace ws(2, Vec(0, 0, 0), Vec(10, 10, 0), 1.0);
  CHECK(ws.contains(Vec(0, 0, 0)));
  CHECK(ws.contains(Vec(10, 10, 0)));
  CHECK(ws.contains(Vec(5, 10, 0)));
  CHECK_FALSE(ws.contains(Vec(-0.001, 5, 0)));
  CHECK_FALSE(ws.contains(Vec(5, 10.001, 0)));
}

TEST_CASE("cell_of floors to the containing cell, upper bound maps inward") {
  Workspace ws(2, Vec(0, 0, 0), Vec(10, 10, 0), 1.0);
  CHECK(ws.cell_of(Vec(0.0, 0.0, 0)) == std::array<int, 3>{0, 0, 0});
  CHECK(ws.cell_of(Vec(0.999, 0.0, 0)) == std::array<int, 3>{0, 0, 0});
  CHECK(ws.cell_of(Vec(1.0, 0.0, 0)) == std::array<int, 3>{1, 0, 0});
  CHECK(ws.cell_of(Vec(9.5, 3.5, 0)) == std::array<int, 3>{9, 3, 0});
  // Exactly on the upper bound: inside per contains(), so it must map to a
  // valid cell.
  CHECK(ws.cell_of(Vec(10.0, 10.0, 0)) == std::array<int, 3>{9, 9, 0});
}

TEST_CASE("cell_center inverts cell_of at cell midpoints") {
  Workspace ws(2, Vec(-5, 20, 0), Vec(5, 30, 0), 0.5);
  for (int x = 0; x < ws.shape[0]; x += 3) {
    for (int y = 0; y < ws.shape[1]; y += 3) {
      std::array<int, 3> c = {x, y, 0};
      CHECK(ws.cell_of(ws.cell_center(c)) == c);
    }
  }
  CHECK(ws.cell_center({0, 0, 0}).x() == doctest::Approx(-4.75));
  CHECK(ws.cell_center({0, 0, 0}).y() == doctest::Approx(20.25));
}

TEST_CASE("linear_index is a bijection over the grid") {
  Workspace ws(3, Vec(0, 0, 0), Vec(4, 3, 2), 1.0);
  std::vector<char> seen(ws.cell_count(), 0);
  for (int z = 0; z < ws.shape[2]; ++z) {
    for (int y = 0; y < ws.shape[1]; ++y) {
      for (int x = 0; x < ws.shape[0]; ++x) {
        std::size_t idx = ws.linear_index({x, y, z});
        REQUIRE(idx < ws.cell_count());
        CHECK(seen[idx] == 0);
        seen[idx] = 1;
      }
    }
  }
}

TEST_CASE("valid_cell matches the shape bounds") {
  Workspace ws(2, Vec(0, 0, 0), Vec(10, 8, 0), 1.0);
  CHECK(ws.valid_cell({0, 0, 0}));
  CHECK(ws.valid_cell({9, 7, 0}));
  CHECK_FALSE(ws.valid_cell({10, 0, 0}));
  CHECK_FALSE(ws.valid_cell({0, 8, 0}));
  CHECK_FALSE(ws.valid_cell({-1, 0, 0}));
  CHECK_FALSE(ws.valid_cell({0, 0, 1}));
}

TEST_CASE("diagonal uses only the active axes") {
  Workspace flat(2, Vec(0, 0, 0), Vec(3, 4, 0), 1.0);
  CHECK(flat.diagonal() == doctest::Approx(5.0));
  Workspace cube(3, Vec(0, 0, 0), Vec(2, 2, 1), 1.0);
  CHECK(cube.diagonal() == doctest::Approx(3.0));
}
