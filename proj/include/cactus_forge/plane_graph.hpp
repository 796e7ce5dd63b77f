#pragma once

#include <array>
#include <optional>
#include <ranges>
#include <span>
#include <utility>
#include <vector>

namespace cactus_forge {

using Vertex = int;
using DartId = int;
using EdgeId = int;
using FaceId = int;
using RegionId = int;
using TriangleId = int;

struct Dart {
  DartId id = -1;
  Vertex origin = -1;
  Vertex target = -1;
  DartId twin = -1;
  DartId next_at_vertex = -1;  // ccw successor around origin
  EdgeId edge = -1;
  FaceId face = -1;            // face on the left
};

// One closed boundary walk. The successor of dart d is next_at_vertex(twin(d)).
struct Face {
  FaceId id = -1;
  std::vector<DartId> boundary;
  RegionId region = -1;
  bool is_triangle = false;  // simple 3-cycle and the only walk of its region
  bool is_outer = false;     // belongs to the unbounded region

  int length() const { return static_cast<int>(boundary.size()); }
};

// A geometric face. It is bounded by zero or more walks (several when the
// graph is disconnected, none when it has no edges).
struct Region {
  RegionId id = -1;
  std::vector<FaceId> walks;
};

// Triangular face candidate, deduplicated by edge triple. A standalone
// 3-cycle has two faces with the same edges and yields one candidate.
struct Triangle {
  TriangleId id = -1;
  std::array<Vertex, 3> vertices{};  // sorted
  std::array<EdgeId, 3> edges{};     // v0v1, v1v2, v0v2
  std::vector<FaceId> faces;
  FaceId primary_face = -1;          // first non-outer face, else first face
};

class PlaneGraph {
 public:
  PlaneGraph() = default;  // empty graph

  // Rotation lists are ccw neighbour orders. `outer` names the dart u->v
  // that lies on the outer face; it is required iff the graph has an edge.
  static PlaneGraph from_rotation(int n, std::vector<std::vector<Vertex>> rotations,
                                  std::optional<std::pair<Vertex, Vertex>> outer);

  // Same as from_rotation, with faces given as ccw vertex cycles. Every
  // directed edge must occur in exactly one cycle.
  static PlaneGraph from_faces(int n, const std::vector<std::vector<Vertex>>& faces,
                               std::pair<Vertex, Vertex> outer);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return static_cast<int>(darts_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int region_count() const { return static_cast<int>(regions_.size()); }

  const std::vector<Vertex>& rotation(Vertex v) const { return rotations_[v]; }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotations_; }
  int degree(Vertex v) const { return static_cast<int>(rotations_[v].size()); }

  const Dart& dart(DartId d) const { return darts_[d]; }
  const std::vector<Dart>& darts() const { return darts_; }
  DartId face_successor(DartId d) const { return darts_[darts_[d].twin].next_at_vertex; }
  // Darts leaving v in rotation order.
  auto darts_at(Vertex v) const { return std::views::iota(first_dart_[v], first_dart_[v + 1]); }

  const Face& face(FaceId f) const { return faces_[f]; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Region>& regions() const { return regions_; }
  RegionId outer_region() const { return outer_region_; }
  std::optional<DartId> outer_dart() const { return outer_dart_; }

  std::pair<Vertex, Vertex> edge_endpoints(EdgeId e) const { return edges_[e]; }
  // Dart of edge e leaving its smaller endpoint.
  DartId edge_dart(EdgeId e) const { return edge_dart_[e]; }
  std::optional<DartId> find_dart(Vertex u, Vertex v) const;
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return find_dart(u, v).has_value(); }

  // Connected components of the underlying graph (isolated vertices count).
  int component_count() const { return component_count_; }
  int component_of(Vertex v) const { return component_of_[v]; }

  const std::vector<Triangle>& candidates() const { return candidates_; }
  std::optional<TriangleId> find_candidate(std::array<Vertex, 3> vertices) const;
  std::vector<Vertex> face_vertices(FaceId f) const;

  // Same sphere embedding with a different unbounded face.
  PlaneGraph with_outer(DartId outer) const;

 private:
  friend struct SubgraphBuilder;

  void build_darts_and_faces();
  void assign_default_regions();
  void assign_regions(const std::vector<RegionId>& face_region, int region_count,
                      RegionId outer_region);
  void finish_faces();
  void validate_euler() const;

  int n_ = 0;
  std::vector<std::vector<Vertex>> rotations_;
  std::vector<DartId> first_dart_;  // darts of v occupy [first_dart_[v], first_dart_[v+1])
  std::vector<Dart> darts_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<DartId> edge_dart_;
  std::vector<Face> faces_;
  std::vector<Region> regions_;
  RegionId outer_region_ = 0;
  std::optional<DartId> outer_dart_;
  std::vector<int> component_of_;
  int component_count_ = 0;
  std::vector<Triangle> candidates_;
};

struct TriangleCounts {
  int all = 0;       // triangular faces, outer included
  int internal = 0;  // outer region excluded
};

TriangleCounts triangular_faces(const PlaneGraph& g);

// 3n - 6 - |E|, edges needed to reach a maximal planar graph.
int missing_edges(const PlaneGraph& g);

struct FaceProvenance {
  // parent_faces[r]: faces of the parent merged into region r of the subgraph.
  std::vector<std::vector<FaceId>> parent_faces;
  RegionId outer_region = 0;
};

struct Subgraph {
  PlaneGraph graph;
  std::vector<Vertex> vertex_to_parent;
  std::vector<Vertex> vertex_from_parent;  // -1 when dropped
  std::vector<DartId> dart_to_parent;
  std::vector<EdgeId> edge_to_parent;
  FaceProvenance provenance;
};

// G[S] with the inherited rotation system. Vertices are relabelled in
// increasing parent order.
Subgraph induced_plane_subgraph(const PlaneGraph& g, std::span<const Vertex> vertices);

// Keeps all vertices and the edges flagged in keep_edge.
Subgraph edge_subgraph(const PlaneGraph& g, const std::vector<bool>& keep_edge);

// Vertices kept per keep_vertex, edges per keep_edge (both endpoints must be kept).
Subgraph restrict_plane_graph(const PlaneGraph& g, const std::vector<bool>& keep_vertex,
                              const std::vector<bool>& keep_edge);

}  // namespace cactus_forge
