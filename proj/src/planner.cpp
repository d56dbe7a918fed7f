#include "photoplan/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace photoplan {
namespace {

constexpr double kSqrt2 = 1.4142135623730951;

struct Node {
  double f;
  double g;
  std::size_t idx;
  bool operator>(const Node& o) const {
    if (f != o.f) return f > o.f;
    return idx > o.idx;  // deterministic tie-break
  }
};

double octile(int dx, int dy) {
  int adx = std::abs(dx), ady = std::abs(dy);
  int diag = std::min(adx, ady);
  return diag * kSqrt2 + (std::max(adx, ady) - diag);
}

std::array<int, 3> nearest_free_cell(const NavMask& mask,
                                     const std::array<int, 3>& cell,
                                     int max_ring) {
  const Workspace& ws = mask.workspace();
  if (!mask.blocked_cell(cell)) return cell;
  for (int ring = 1; ring <= max_ring; ++ring) {
    std::array<int, 3> best{-1, -1, -1};
    double best_d = std::numeric_limits<double>::infinity();
    int zlo = ws.dims == 3 ? -ring : 0;
    int zhi = ws.dims == 3 ? ring : 0;
    for (int dz = zlo; dz <= zhi; ++dz) {
      for (int dy = -ring; dy <= ring; ++dy) {
        for (int dx = -ring; dx <= ring; ++dx) {
          if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) != ring) {
            continue;
          }
          std::array<int, 3> c{cell[0] + dx, cell[1] + dy, cell[2] + dz};
          if (!ws.valid_cell(c) || mask.blocked_cell(c)) continue;
          double d = dx * dx + dy * dy + dz * dz;
          if (d < best_d) {
            best_d = d;
            best = c;
          }
        }
      }
    }
    if (best[0] >= 0) return best;
  }
  throw PlanningError("no free cell near requested endpoint");
}

}  // namespace

std::vector<char> reachable_cells(const NavMask& mask, const Vec& start) {
  const Workspace& ws = mask.workspace();
  std::vector<char> out(ws.cell_count(), 0);
  if (!ws.contains(start)) return out;
  std::array<int, 3> seed;
  try {
    seed = nearest_free_cell(mask, ws.cell_of(start), 3);
  } catch (const PlanningError&) {
    return out;  // start buried in blocked space: nothing is reachable
  }

  // 2D uses the same moves as the grid search (8-connected, diagonals only
  // past free orthogonal neighbors) so "reachable" here matches "plannable".
  // 3D stays face-connected, a conservative proxy for the sampling planner.
  std::vector<std::array<int, 3>> queue;
  queue.push_back(seed);
  out[ws.linear_index(seed)] = 1;
  auto visit = [&](const std::array<int, 3>& c) {
    if (!ws.valid_cell(c) || mask.blocked_cell(c)) return false;
    std::size_t i = ws.linear_index(c);
    if (out[i]) return false;
    out[i] = 1;
    queue.push_back(c);
    return true;
  };
  auto free_cell = [&](int x, int y, int z) {
    std::array<int, 3> c{x, y, z};
    return ws.valid_cell(c) && !mask.blocked_cell(c);
  };
  while (!queue.empty()) {
    const std::array<int, 3> c = queue.back();
    queue.pop_back();
    if (ws.dims == 2) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          if (dx != 0 && dy != 0 &&
              (!free_cell(c[0] + dx, c[1], 0) ||
               !free_cell(c[0], c[1] + dy, 0))) {
            continue;
          }
          visit({c[0] + dx, c[1] + dy, 0});
        }
      }
    } else {
      for (int a = 0; a < 3; ++a) {
        for (int s = -1; s <= 1; s += 2) {
          std::array<int, 3> n = c;
          n[a] += s;
          visit(n);
        }
      }
    }
  }
  return out;
}

GridSearchResult astar_search(const NavMask& mask,
                              const std::array<int, 3>& start_cell,
                              const std::array<int, 3>& goal_cell) {
  const Workspace& ws = mask.workspace();
  if (ws.dims != 2) {
    throw std::invalid_argument("grid A* supports 2D workspaces only");
  }
  GridSearchResult result;
  if (!ws.valid_cell(start_cell) || !ws.valid_cell(goal_cell) ||
      mask.blocked_cell(start_cell) || mask.blocked_cell(goal_cell)) {
    return result;
  }

  const std::size_t n = ws.cell_count();
  std::vector<double> g(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> parent(n, n);
  std::vector<bool> closed(n, false);

  auto at = [&](int x, int y) {
    return ws.linear_index({x, y, 0});
  };
  const std::size_t start_idx = at(start_cell[0], start_cell[1]);
  const std::size_t goal_idx = at(goal_cell[0], goal_cell[1]);

  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> open;
  g[start_idx] = 0.0;
  open.push({octile(goal_cell[0] - start_cell[0],
                    goal_cell[1] - start_cell[1]),
             0.0, start_idx});

  const int nx = ws.shape[0], ny = ws.shape[1];
  auto free_at = [&](int x, int y) {
    return x >= 0 && x < nx && y >= 0 && y < ny &&
           !mask.blocked_cell({x, y, 0});
  };

  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (closed[node.idx]) continue;
    closed[node.idx] = true;
    if (node.idx == goal_idx) break;

    int x = static_cast<int>(node.idx % static_cast<std::size_t>(nx));
    int y = static_cast<int>(node.idx / static_cast<std::size_t>(nx));
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        int cx = x + dx, cy = y + dy;
        if (!free_at(cx, cy)) continue;
        // A diagonal move sweeps the corner shared with both orthogonal
        // neighbors; require them free so the motion stays in cleared space.
        if (dx != 0 && dy != 0 && (!free_at(x + dx, y) || !free_at(x, cy))) {
          continue;
        }
        double step = (dx != 0 && dy != 0) ? kSqrt2 : 1.0;
        std::size_t ci = at(cx, cy);
        double cand = node.g + step;
        if (cand + 1e-12 < g[ci]) {
          g[ci] = cand;
          parent[ci] = node.idx;
          open.push({cand + octile(goal_cell[0] - cx, goal_cell[1] - cy),
                     cand, ci});
        }
      }
    }
  }

  if (!closed[goal_idx]) return result;
  std::vector<std::size_t> chain;
  for (std::size_t i = goal_idx; i != start_idx; i = parent[i]) {
    chain.push_back(i);
  }
  chain.push_back(start_idx);
  std::reverse(chain.begin(), chain.end());
  result.cells.reserve(chain.size());
  for (std::size_t i : chain) {
    int x = static_cast<int>(i % static_cast<std::size_t>(nx));
    int y = static_cast<int>(i / static_cast<std::size_t>(nx));
    result.cells.push_back({x, y, 0});
  }
  for (std::size_t k = 1; k < result.cells.size(); ++k) {
    bool diag = result.cells[k][0] != result.cells[k - 1][0] &&
                result.cells[k][1] != result.cells[k - 1][1];
    (diag ? result.diagonal_steps : result.straight_steps) += 1;
  }
  result.found = true;
  return result;
}

Path plan_grid_astar(const NavMask& mask, const Vec& start, const Vec& goal) {
  const Workspace& ws = mask.workspace();
  if (ws.dims != 2) {
    throw std::invalid_argument("grid A* supports 2D workspaces only");
  }
  if (!ws.contains(start) || !ws.contains(goal)) {
    throw PlanningError("path endpoint outside workspace");
  }

  std::array<int, 3> sc = nearest_free_cell(mask, ws.cell_of(start), 3);
  std::array<int, 3> gc = nearest_free_cell(mask, ws.cell_of(goal), 3);
  GridSearchResult grid = astar_search(mask, sc, gc);
  if (!grid.found) throw PlanningError("no grid route between endpoints");

  std::vector<Vec> points;
  points.push_back(start);
  for (const auto& cell : grid.cells) points.push_back(ws.cell_center(cell));
  points.push_back(goal);

  // Greedy shortcutting: from each kept point, jump to the farthest later
  // point reachable by a clear straight segment.
  std::vector<Vec> smooth;
  smooth.push_back(points.front());
  std::size_t i = 0;
  while (i + 1 < points.size()) {
    std::size_t best = i + 1;
    for (std::size_t j = points.size() - 1; j > i + 1; --j) {
      if (mask.segment_clear(points[i], points[j])) {
        best = j;
        break;
      }
    }
    smooth.push_back(points[best]);
    i = best;
  }

  Path path;
  path.waypoints = std::move(smooth);
  for (std::size_t k = 1; k < path.waypoints.size(); ++k) {
    path.length += (path.waypoints[k] - path.waypoints[k - 1]).norm();
  }
  return path;
}

Path plan_rrt_star(const NavMask& mask, const Vec& start, const Vec& goal,
                   int iterations, Rng& rng) {
  const Workspace& ws = mask.workspace();
  if (!ws.contains(start) || !ws.contains(goal)) {
    throw PlanningError("path endpoint outside workspace");
  }
  if ((goal - start).norm() < 1e-12) {
    Path trivial;
    trivial.waypoints = {start};
    return trivial;
  }
  if (mask.blocked(goal)) throw PlanningError("goal position is blocked");
  if (mask.blocked(start)) {
    // Freshly sensed obstacles can inflate over the robot's current cell.
    // Root the tree at the nearest free cell instead (mirrors the grid
    // planner's endpoint snapping) and splice the true start back in front.
    const Vec snapped =
        ws.cell_center(nearest_free_cell(mask, ws.cell_of(start), 3));
    Path path = plan_rrt_star(mask, snapped, goal, iterations, rng);
    path.length += (snapped - start).norm();
    path.waypoints.insert(path.waypoints.begin(), start);
    return path;
  }

  const double tol = ws.resolution;
  if ((goal - start).norm() <= tol || mask.segment_clear(start, goal)) {
    Path direct;
    direct.waypoints = {start, goal};
    direct.length = (goal - start).norm();
    return direct;
  }

  struct TreeNode {
    Vec p;
    int parent;
    double cost;
    std::vector<int> children;
  };
  std::vector<TreeNode> tree;
  tree.push_back({start, -1, 0.0, {}});

  const double steer = 2.0 * ws.resolution;
  const int dims = ws.dims;
  const double gamma =
      3.0 * ws.diagonal() /
      std::pow(static_cast<double>(std::max(iterations, 2)), 1.0 / dims);
  int goal_node = -1;

  auto sample = [&]() {
    if (rng.uniform01() < 0.05) return goal;  // goal bias
    Vec p = Vec::Zero();
    for (int a = 0; a < dims; ++a) p[a] = rng.uniform(ws.lower[a], ws.upper[a]);
    return p;
  };

  std::vector<int> stack;
  auto propagate_cost = [&](int root, double delta) {
    stack.clear();
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      tree[v].cost += delta;
      for (int c : tree[v].children) stack.push_back(c);
    }
  };

  for (int it = 0; it < iterations; ++it) {
    Vec x_rand = sample();

    int nearest = 0;
    double best_d = (tree[0].p - x_rand).squaredNorm();
    for (std::size_t k = 1; k < tree.size(); ++k) {
      double d = (tree[k].p - x_rand).squaredNorm();
      if (d < best_d) {
        best_d = d;
        nearest = static_cast<int>(k);
      }
    }

    Vec x_new = x_rand;
    double dist = (x_rand - tree[nearest].p).norm();
    if (dist > steer) {
      x_new = tree[nearest].p + (steer / dist) * (x_rand - tree[nearest].p);
    }
    if (!ws.contains(x_new) || mask.blocked(x_new)) continue;
    if (!mask.segment_clear(tree[nearest].p, x_new)) continue;

    double n = static_cast<double>(tree.size() + 1);
    double radius =
        std::max(steer, gamma * std::pow(std::log(n) / n, 1.0 / dims));

    // Choose the cheapest collision-free parent in the neighborhood.
    int parent = nearest;
    double parent_cost =
        tree[nearest].cost + (x_new - tree[nearest].p).norm();
    std::vector<int> near;
    for (std::size_t k = 0; k < tree.size(); ++k) {
      if ((tree[k].p - x_new).norm() <= radius) near.push_back(static_cast<int>(k));
    }
    for (int k : near) {
      double cand = tree[k].cost + (x_new - tree[k].p).norm();
      if (cand + 1e-12 < parent_cost && mask.segment_clear(tree[k].p, x_new)) {
        parent = k;
        parent_cost = cand;
      }
    }

    int new_idx = static_cast<int>(tree.size());
    tree.push_back({x_new, parent, parent_cost, {}});
    tree[parent].children.push_back(new_idx);

    // Rewire neighbors through the new node when that is cheaper.
    for (int k : near) {
      if (k == parent) continue;
      double cand = parent_cost + (tree[k].p - x_new).norm();
      if (cand + 1e-12 < tree[k].cost &&
          mask.segment_clear(x_new, tree[k].p)) {
        int old_parent = tree[k].parent;
        if (old_parent >= 0) {
          auto& sib = tree[old_parent].children;
          sib.erase(std::find(sib.begin(), sib.end(), k));
        }
        tree[k].parent = new_idx;
        tree[new_idx].children.push_back(k);
        propagate_cost(k, cand - tree[k].cost);
      }
    }

    if ((x_new - goal).norm() <= tol &&
        mask.segment_clear(x_new, goal)) {
      double total = parent_cost + (x_new - goal).norm();
      if (goal_node < 0 ||
          total < tree[goal_node].cost + (tree[goal_node].p - goal).norm()) {
        goal_node = new_idx;
      }
    }
  }

  if (goal_node < 0) throw PlanningError("sampling planner found no route");

  std::vector<Vec> rev;
  rev.push_back(goal);
  for (int v = goal_node; v >= 0; v = tree[v].parent) rev.push_back(tree[v].p);
  std::reverse(rev.begin(), rev.end());

  // Same shortcutting pass as the grid planner.
  std::vector<Vec> smooth;
  smooth.push_back(rev.front());
  std::size_t i = 0;
  while (i + 1 < rev.size()) {
    std::size_t best = i + 1;
    for (std::size_t j = rev.size() - 1; j > i + 1; --j) {
      if (mask.segment_clear(rev[i], rev[j])) {
        best = j;
        break;
      }
    }
    smooth.push_back(rev[best]);
    i = best;
  }

  Path path;
  path.waypoints = std::move(smooth);
  for (std::size_t k = 1; k < path.waypoints.size(); ++k) {
    path.length += (path.waypoints[k] - path.waypoints[k - 1]).norm();
  }
  return path;
}

bool path_clear(const NavMask& mask, const Path& path) {
  for (std::size_t k = 1; k < path.waypoints.size(); ++k) {
    if (!mask.segment_clear(path.waypoints[k - 1], path.waypoints[k])) {
      return false;
    }
  }
  return true;
}

}  // namespace photoplan
