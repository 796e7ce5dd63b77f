#include "cactus_forge/cactus.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "cactus_forge/error.hpp"

namespace cactus_forge {

int SplitComponents::part_of(Vertex v) const {
  for (int i = 0; i < 3; ++i) {
    if (std::binary_search(parts[i].begin(), parts[i].end(), v)) return i;
  }
  return -1;
}

TriangularCactus::TriangularCactus(const PlaneGraph& g)
    : graph_(&g),
      member_(g.candidates().size(), false),
      dsu_(g.vertex_count()) {}

TriangularCactus TriangularCactus::from_triangles(const PlaneGraph& g,
                                                  std::span<const TriangleId> ids) {
  TriangularCactus c(g);
  for (TriangleId t : ids) {
    c.check_id(t);
    if (c.contains(t)) {
      throw Error(ErrorCode::invalid_cactus, "triangle " + std::to_string(t) + " listed twice");
    }
    if (!c.try_add(t)) {
      const auto& v = g.candidates()[t].vertices;
      throw Error(ErrorCode::invalid_cactus,
                  "triangle (" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                      std::to_string(v[2]) + ") closes a cycle");
    }
  }
  return c;
}

TriangularCactus TriangularCactus::from_vertex_triples(
    const PlaneGraph& g, std::span<const std::array<Vertex, 3>> triples) {
  std::vector<TriangleId> ids;
  for (const auto& tri : triples) {
    auto id = g.find_candidate(tri);
    if (!id) {
      throw Error(ErrorCode::unknown_triangle,
                  "(" + std::to_string(tri[0]) + "," + std::to_string(tri[1]) + "," +
                      std::to_string(tri[2]) + ") is not a triangular face");
    }
    ids.push_back(*id);
  }
  return from_triangles(g, ids);
}

void TriangularCactus::check_id(TriangleId t) const {
  if (t < 0 || t >= static_cast<int>(member_.size())) {
    throw Error(ErrorCode::unknown_triangle, "id " + std::to_string(t));
  }
}

bool TriangularCactus::can_add(TriangleId t) const {
  check_id(t);
  if (member_[t]) return false;
  const auto& v = graph_->candidates()[t].vertices;
  const int a = dsu_.find(v[0]), b = dsu_.find(v[1]), c = dsu_.find(v[2]);
  return a != b && b != c && a != c;
}

bool TriangularCactus::try_add(TriangleId t) {
  if (!can_add(t)) return false;
  const auto& v = graph_->candidates()[t].vertices;
  dsu_.unite(v[0], v[1]);
  dsu_.unite(v[1], v[2]);
  member_[t] = true;
  ++count_;
  return true;
}

void TriangularCactus::remove(TriangleId t) {
  check_id(t);
  if (!member_[t]) {
    throw Error(ErrorCode::triangle_not_in_cactus, "id " + std::to_string(t));
  }
  member_[t] = false;
  --count_;
  rebuild();
}

void TriangularCactus::rebuild() {
  dsu_ = DisjointSets(graph_->vertex_count());
  for (TriangleId t = 0; t < static_cast<int>(member_.size()); ++t) {
    if (!member_[t]) continue;
    const auto& v = graph_->candidates()[t].vertices;
    dsu_.unite(v[0], v[1]);
    dsu_.unite(v[1], v[2]);
  }
}

std::vector<TriangleId> TriangularCactus::triangles() const {
  std::vector<TriangleId> out;
  for (TriangleId t = 0; t < static_cast<int>(member_.size()); ++t) {
    if (member_[t]) out.push_back(t);
  }
  return out;
}

std::vector<std::array<Vertex, 3>> TriangularCactus::vertex_triples() const {
  std::vector<std::array<Vertex, 3>> out;
  for (TriangleId t : triangles()) out.push_back(graph_->candidates()[t].vertices);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> TriangularCactus::components() const {
  const int n = graph_->vertex_count();
  std::vector<int> index_of_root(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < n; ++v) {
    int r = dsu_.find(v);
    if (index_of_root[r] == -1) {
      index_of_root[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[index_of_root[r]].push_back(v);
  }
  return out;
}

std::vector<Vertex> TriangularCactus::component_containing(Vertex v) const {
  std::vector<Vertex> out;
  const int r = dsu_.find(v);
  for (Vertex w = 0; w < graph_->vertex_count(); ++w) {
    if (dsu_.find(w) == r) out.push_back(w);
  }
  return out;
}

SplitComponents TriangularCactus::split_at(TriangleId t) const {
  check_id(t);
  if (!member_[t]) throw Error(ErrorCode::triangle_not_in_cactus, "id " + std::to_string(t));
  const int n = graph_->vertex_count();
  std::vector<std::vector<Vertex>> adj(n);
  for (TriangleId s : triangles()) {
    if (s == t) continue;
    const auto& v = graph_->candidates()[s].vertices;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        adj[v[i]].push_back(v[j]);
        adj[v[j]].push_back(v[i]);
      }
    }
  }
  SplitComponents split;
  split.corners = graph_->candidates()[t].vertices;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < 3; ++i) {
    std::queue<Vertex> queue;
    queue.push(split.corners[i]);
    seen[split.corners[i]] = true;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      split.parts[i].push_back(x);
      for (Vertex y : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          queue.push(y);
        }
      }
    }
    std::sort(split.parts[i].begin(), split.parts[i].end());
  }
  return split;
}

bool is_valid_cactus(const PlaneGraph& g, std::span<const TriangleId> ids) {
  std::set<EdgeId> used_edges;
  std::set<TriangleId> distinct;
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<bool> spanned(n, false);
  for (TriangleId t : ids) {
    if (t < 0 || t >= static_cast<int>(g.candidates().size())) return false;
    if (!distinct.insert(t).second) return false;
    const Triangle& tri = g.candidates()[t];
    for (EdgeId e : tri.edges) {
      if (!used_edges.insert(e).second) return false;
      auto [u, v] = g.edge_endpoints(e);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (Vertex v : tri.vertices) spanned[v] = true;
  }
  int vertex_count = 0, component_count = 0;
  std::vector<bool> seen(n, false);
  for (Vertex s = 0; s < n; ++s) {
    if (!spanned[s]) continue;
    ++vertex_count;
    if (seen[s]) continue;
    ++component_count;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return vertex_count - component_count == 2 * static_cast<int>(distinct.size());
}

}  // namespace cactus_forge
