#pragma once

#include <array>
#include <span>
#include <vector>

#include "cactus_forge/disjoint_sets.hpp"
#include "cactus_forge/plane_graph.hpp"

namespace cactus_forge {

// The three parts of a cactus component after deleting the edges of one of
// its triangles. parts[i] contains corners[i].
struct SplitComponents {
  std::array<Vertex, 3> corners{};
  std::array<std::vector<Vertex>, 3> parts;

  int part_of(Vertex v) const;  // -1 when v lies in none of the parts
};

// Set of candidate triangles of one plane graph whose union is a forest of
// triangles. The graph must outlive the cactus.
class TriangularCactus {
 public:
  explicit TriangularCactus(const PlaneGraph& g);

  // Validates against the graph; throws InvalidCactus or UnknownTriangle.
  static TriangularCactus from_triangles(const PlaneGraph& g, std::span<const TriangleId> ids);
  static TriangularCactus from_vertex_triples(const PlaneGraph& g,
                                              std::span<const std::array<Vertex, 3>> triples);

  // Accepted iff the three corners lie in three different components.
  bool try_add(TriangleId t);
  bool can_add(TriangleId t) const;
  void remove(TriangleId t);
  bool contains(TriangleId t) const { return member_.at(t); }

  int size() const { return count_; }
  std::vector<TriangleId> triangles() const;  // ascending
  std::vector<std::array<Vertex, 3>> vertex_triples() const;

  int component_root(Vertex v) const { return dsu_.find(v); }
  bool same_component(Vertex a, Vertex b) const { return dsu_.same(a, b); }
  // Vertex partition, each part ascending, parts ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components() const;
  std::vector<Vertex> component_containing(Vertex v) const;

  SplitComponents split_at(TriangleId t) const;

  const PlaneGraph& graph() const { return *graph_; }

 private:
  void check_id(TriangleId t) const;
  void rebuild();

  const PlaneGraph* graph_;
  std::vector<bool> member_;
  int count_ = 0;
  DisjointSets dsu_;
};

// Independent check: triangle edges pairwise disjoint and
// (spanned vertices) - (components among them) == 2 * (number of triangles).
bool is_valid_cactus(const PlaneGraph& g, std::span<const TriangleId> ids);

}  // namespace cactus_forge
