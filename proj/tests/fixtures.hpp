#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "cactus_forge/plane_graph.hpp"

namespace fixtures {

using cactus_forge::PlaneGraph;

inline PlaneGraph triangle() {
  return PlaneGraph::from_rotation(3, {{1, 2}, {2, 0}, {0, 1}}, std::make_pair(0, 2));
}

inline PlaneGraph path3() {
  return PlaneGraph::from_rotation(3, {{1}, {0, 2}, {1}}, std::make_pair(0, 1));
}

// Triangles {0,1,2} and {3,4,5} side by side plus isolated vertex 6.
inline PlaneGraph two_triangles_and_point() {
  return PlaneGraph::from_faces(7, {{0, 1, 2}, {0, 2, 1}, {3, 4, 5}, {3, 5, 4}},
                                {0, 2});
}

// K4 with outer face (0,2,1): vertex 3 sits inside triangle 0,1,2.
inline PlaneGraph k4_apex_inside() {
  return PlaneGraph::from_faces(4, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {0, 2, 1}}, {0, 2});
}

// Same sphere embedding with outer face (2,0,3), so face (0,2,1) is bounded
// and vertex 3 lies outside triangle 0,1,2.
inline PlaneGraph k4_apex_outside() {
  return PlaneGraph::from_faces(4, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {0, 2, 1}}, {0, 3});
}

}  // namespace fixtures

namespace fixtures {

// Triangles (2i, 2i+1, 2i+2) for i < k, consecutive ones sharing a vertex.
inline PlaneGraph triangle_chain(int k) {
  std::vector<std::vector<cactus_forge::Vertex>> faces;
  for (int i = 0; i < k; ++i) faces.push_back({2 * i, 2 * i + 1, 2 * i + 2});
  std::vector<cactus_forge::Vertex> outer;
  for (int i = 0; i <= k; ++i) outer.push_back(2 * i);
  for (int v = 2 * k - 1; v >= 1; --v) outer.push_back(v);
  faces.push_back(outer);
  return PlaneGraph::from_faces(2 * k + 1, faces, {outer[0], outer[1]});
}

// Central triangle 1,2,4 with ears 3 (on 1-2), 5 (on 1-4), 6 (on 2-4);
// vertex 0 is isolated.
inline PlaneGraph triangle_with_ears() {
  return PlaneGraph::from_faces(
      7, {{1, 2, 4}, {2, 1, 3}, {4, 2, 6}, {1, 4, 5}, {1, 5, 4, 6, 2, 3}}, {1, 5});
}

inline cactus_forge::TriangleId candidate(const PlaneGraph& g, std::array<int, 3> triple) {
  auto id = g.find_candidate(triple);
  if (!id) throw std::runtime_error("fixture triangle is not a face");
  return *id;
}

}  // namespace fixtures

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "cactus_forge/rng.hpp"

namespace fixtures {

// Plane graph of a straight-line drawing. Rotations are sorted by angle; the
// outer dart leaves the lowest vertex towards its steepest neighbour.
inline PlaneGraph straight_line(const std::vector<std::pair<double, double>>& pos,
                                const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(pos.size());
  std::vector<std::vector<cactus_forge::Vertex>> rot(n);
  for (auto [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  auto angle = [&](int from, int to) {
    return std::atan2(pos[to].second - pos[from].second, pos[to].first - pos[from].first);
  };
  for (int v = 0; v < n; ++v) {
    std::sort(rot[v].begin(), rot[v].end(),
              [&](int a, int b) { return angle(v, a) < angle(v, b); });
  }
  int low = -1;
  for (int v = 0; v < n; ++v) {
    if (rot[v].empty()) continue;
    if (low < 0 || pos[v].second < pos[low].second ||
        (pos[v].second == pos[low].second && pos[v].first < pos[low].first)) {
      low = v;
    }
  }
  std::optional<std::pair<int, int>> outer;
  if (low >= 0) {
    int best = rot[low].front();
    for (int w : rot[low]) {
      if (angle(low, w) > angle(low, best)) best = w;
    }
    outer = std::make_pair(low, best);
  }
  return PlaneGraph::from_rotation(n, rot, outer);
}

struct FenceInstance {
  PlaneGraph graph;
  std::vector<std::array<int, 3>> cactus;
};

// Triangles (s[i-1], s[i], apex[i]) for i = 1..m along the upper unit arc,
// apexes outside the circle. Below the arc the polygon s[0..m] is
// triangulated at random. Each of its triangles holds nothing, a singleton
// adjacent to all three corners, or an ear on one side; the region under the
// chord s[0]s[m] holds a singleton with probability 1/2.
// Neighbouring apexes are joined with probability 1/2, a quarter of those
// edges carrying a singleton on their outer side. With a lid (m >= 3) the
// end apexes move far out and are joined over the top by an edge
// with a singleton above it, so the apex side becomes a bounded region.
inline FenceInstance heavy_fence(int m, std::uint64_t seed, bool lid = false) {
  if (m < 1 || (lid && m < 3)) throw std::invalid_argument("fence too short");
  cactus_forge::Rng rng(seed);
  std::vector<std::pair<double, double>> pos;
  std::vector<std::pair<int, int>> edges;
  FenceInstance out;
  const double step = std::numbers::pi / m;
  const double lid_height = 3.2;
  for (int i = 0; i <= m; ++i) pos.emplace_back(std::cos(std::numbers::pi - i * step),
                                                std::sin(std::numbers::pi - i * step));
  for (int i = 1; i <= m; ++i) {
    const double mid = std::numbers::pi - (i - 0.5) * step;
    const double radius = lid && (i == 1 || i == m) ? lid_height / std::sin(step / 2) : 1.6;
    pos.emplace_back(radius * std::cos(mid), radius * std::sin(mid));
    const int apex = m + i;
    edges.push_back({i - 1, i});
    edges.push_back({i - 1, apex});
    edges.push_back({i, apex});
    out.cactus.push_back({i - 1, i, apex});
  }
  auto singleton = [&](double x, double y, std::vector<int> nbrs) {
    const int z = static_cast<int>(pos.size());
    pos.emplace_back(x, y);
    for (int w : nbrs) edges.push_back({w, z});
  };
  // Random triangulation of the convex polygon s[0..m] by recursive splits.
  std::vector<std::array<int, 3>> pieces;
  std::vector<std::pair<int, int>> todo{{0, m}};
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    if (b - a < 2) continue;
    const int c = a + 1 + static_cast<int>(rng.below(b - a - 1));
    pieces.push_back({a, c, b});
    if (c - a >= 2) edges.push_back({a, c});
    if (b - c >= 2) edges.push_back({c, b});
    todo.push_back({a, c});
    todo.push_back({c, b});
  }
  if (m >= 2) edges.push_back({0, m});
  for (auto [a, c, b] : pieces) {
    const auto pick = rng.below(8);
    const double cx = (pos[a].first + pos[b].first + pos[c].first) / 3;
    const double cy = (pos[a].second + pos[b].second + pos[c].second) / 3;
    if (pick == 0) continue;
    if (pick <= 5) {
      singleton(cx, cy, {a, b, c});
      continue;
    }
    // Ear on one side: pulled from the centroid towards that side's midpoint.
    const std::array<std::pair<int, int>, 3> sides{{{a, c}, {c, b}, {a, b}}};
    auto [x, y] = sides[rng.below(3)];
    singleton((cx + pos[x].first + pos[y].first) / 3, (cy + pos[x].second + pos[y].second) / 3,
              {x, y});
  }
  if (m >= 2 && rng.below(2) == 0) singleton(0.0, -0.5, {0, m});
  for (int i = 1; i < m; ++i) {
    const auto pick = rng.below(8);
    if (pick < 4) continue;
    edges.push_back({m + i, m + i + 1});
    if (pick == 7) {
      const double mid = std::numbers::pi - i * step;
      singleton(2.6 * std::cos(mid), 2.6 * std::sin(mid), {m + i, m + i + 1});
    }
  }
  if (lid) {
    edges.push_back({m + 1, 2 * m});
    singleton(0.0, lid_height + 1.0, {m + 1, 2 * m});
  }
  out.graph = straight_line(pos, edges);
  return out;
}

}  // namespace fixtures
