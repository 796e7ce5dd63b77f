#include "cactus_forge/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cactus_forge/disjoint_sets.hpp"
#include "cactus_forge/error.hpp"

namespace cactus_forge {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::loop_edge: return "LoopEdge";
    case ErrorCode::parallel_edge: return "ParallelEdge";
    case ErrorCode::asymmetric_adjacency: return "AsymmetricAdjacency";
    case ErrorCode::non_planar_embedding: return "NonPlanarEmbedding";
    case ErrorCode::bad_outer_designator: return "BadOuterDesignator";
    case ErrorCode::malformed_input: return "MalformedInput";
    case ErrorCode::empty_set: return "EmptySet";
    case ErrorCode::too_few_vertices: return "TooFewVertices";
    case ErrorCode::disconnected: return "Disconnected";
    case ErrorCode::unknown_triangle: return "UnknownTriangle";
    case ErrorCode::invalid_cactus: return "InvalidCactus";
    case ErrorCode::triangle_not_in_cactus: return "TriangleNotInCactus";
    case ErrorCode::iteration_cap_exceeded: return "IterationCapExceeded";
    case ErrorCode::too_many_candidates: return "TooManyCandidates";
    case ErrorCode::not_a_component: return "NotAComponent";
    case ErrorCode::not_locally_optimal_input: return "NotLocallyOptimalInput";
    case ErrorCode::identity_violation: return "IdentityViolation";
    case ErrorCode::too_small: return "TooSmall";
    case ErrorCode::unknown_name: return "UnknownName";
    case ErrorCode::io_failure: return "IoFailure";
    case ErrorCode::invalid_config: return "InvalidConfig";
  }
  return "Unknown";
}

namespace {

std::string edge_name(Vertex u, Vertex v) {
  return std::to_string(u) + "-" + std::to_string(v);
}

void validate_rotations(int n, const std::vector<std::vector<Vertex>>& rotations) {
  if (n < 0) throw Error(ErrorCode::malformed_input, "negative vertex count");
  if (static_cast<int>(rotations.size()) != n) {
    throw Error(ErrorCode::malformed_input,
                "expected " + std::to_string(n) + " rotation lists, got " +
                    std::to_string(rotations.size()));
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : rotations[v]) {
      if (w < 0 || w >= n) {
        throw Error(ErrorCode::malformed_input,
                    "vertex " + std::to_string(v) + " lists out-of-range neighbour " +
                        std::to_string(w));
      }
      if (w == v) throw Error(ErrorCode::loop_edge, "at vertex " + std::to_string(v));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> sorted = rotations[v];
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw Error(ErrorCode::parallel_edge, "edge " + edge_name(v, *dup) + " listed twice at vertex " +
                                                std::to_string(v));
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : rotations[v]) {
      const auto& back = rotations[w];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        throw Error(ErrorCode::asymmetric_adjacency,
                    std::to_string(v) + " lists " + std::to_string(w) + " but " +
                        std::to_string(w) + " does not list " + std::to_string(v));
      }
    }
  }
}

}  // namespace

std::optional<DartId> PlaneGraph::find_dart(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return std::nullopt;
  const auto& rot = rotations_[u];
  for (std::size_t i = 0; i < rot.size(); ++i) {
    if (rot[i] == v) return first_dart_[u] + static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<EdgeId> PlaneGraph::find_edge(Vertex u, Vertex v) const {
  auto d = find_dart(u, v);
  if (!d) return std::nullopt;
  return darts_[*d].edge;
}

std::optional<TriangleId> PlaneGraph::find_candidate(std::array<Vertex, 3> vertices) const {
  std::sort(vertices.begin(), vertices.end());
  for (const Triangle& t : candidates_) {
    if (t.vertices == vertices) return t.id;
  }
  return std::nullopt;
}

std::vector<Vertex> PlaneGraph::face_vertices(FaceId f) const {
  std::vector<Vertex> out;
  for (DartId d : faces_[f].boundary) out.push_back(darts_[d].origin);
  return out;
}

void PlaneGraph::build_darts_and_faces() {
  first_dart_.assign(n_ + 1, 0);
  for (Vertex v = 0; v < n_; ++v) {
    first_dart_[v + 1] = first_dart_[v] + static_cast<int>(rotations_[v].size());
  }
  darts_.assign(first_dart_[n_], Dart{});
  for (Vertex v = 0; v < n_; ++v) {
    const int deg = static_cast<int>(rotations_[v].size());
    for (int i = 0; i < deg; ++i) {
      Dart& d = darts_[first_dart_[v] + i];
      d.id = first_dart_[v] + i;
      d.origin = v;
      d.target = rotations_[v][i];
      d.next_at_vertex = first_dart_[v] + (i + 1) % deg;
    }
  }
  for (Dart& d : darts_) {
    d.twin = *find_dart(d.target, d.origin);
  }

  edges_.clear();
  edge_dart_.clear();
  for (Dart& d : darts_) {
    if (d.edge != -1) continue;
    const EdgeId e = static_cast<EdgeId>(edges_.size());
    Vertex lo = std::min(d.origin, d.target);
    Vertex hi = std::max(d.origin, d.target);
    edges_.emplace_back(lo, hi);
    d.edge = e;
    darts_[d.twin].edge = e;
    edge_dart_.push_back(d.origin == lo ? d.id : d.twin);
  }

  faces_.clear();
  for (DartId start = 0; start < dart_count(); ++start) {
    if (darts_[start].face != -1) continue;
    Face face;
    face.id = static_cast<FaceId>(faces_.size());
    DartId d = start;
    do {
      darts_[d].face = face.id;
      face.boundary.push_back(d);
      d = face_successor(d);
    } while (d != start);
    faces_.push_back(std::move(face));
  }

  DisjointSets dsu(n_);
  for (const auto& [u, v] : edges_) dsu.unite(u, v);
  component_of_.assign(n_, -1);
  component_count_ = 0;
  std::vector<int> root_label(n_, -1);
  for (Vertex v = 0; v < n_; ++v) {
    int r = dsu.find(v);
    if (root_label[r] == -1) root_label[r] = component_count_++;
    component_of_[v] = root_label[r];
  }
}

void PlaneGraph::validate_euler() const {
  std::vector<int> verts(component_count_, 0), edge_count(component_count_, 0),
      face_count(component_count_, 0);
  for (Vertex v = 0; v < n_; ++v) ++verts[component_of_[v]];
  for (const auto& [u, v] : edges_) ++edge_count[component_of_[u]];
  for (const Face& f : faces_) ++face_count[component_of_[darts_[f.boundary.front()].origin]];
  for (int c = 0; c < component_count_; ++c) {
    if (edge_count[c] == 0) continue;
    const int chi = verts[c] - edge_count[c] + face_count[c];
    if (chi != 2) {
      Vertex witness = static_cast<Vertex>(
          std::find(component_of_.begin(), component_of_.end(), c) - component_of_.begin());
      throw Error(ErrorCode::non_planar_embedding,
                  "component containing vertex " + std::to_string(witness) + " has V-E+F = " +
                      std::to_string(chi) + " (expected 2)");
    }
  }
}

void PlaneGraph::assign_default_regions() {
  // Each component with edges contributes one walk to the unbounded region:
  // the designated walk for its own component, otherwise its longest walk.
  std::vector<FaceId> outer_walk(component_count_, -1);
  if (outer_dart_) outer_walk[component_of_[darts_[*outer_dart_].origin]] = darts_[*outer_dart_].face;
  for (const Face& f : faces_) {
    int c = component_of_[darts_[f.boundary.front()].origin];
    if (outer_dart_ && c == component_of_[darts_[*outer_dart_].origin]) continue;
    if (outer_walk[c] == -1 || faces_[outer_walk[c]].length() < f.length()) outer_walk[c] = f.id;
  }
  std::vector<RegionId> face_region(faces_.size(), -1);
  int next = 1;
  for (const Face& f : faces_) {
    int c = component_of_[darts_[f.boundary.front()].origin];
    face_region[f.id] = (outer_walk[c] == f.id) ? 0 : next++;
  }
  assign_regions(face_region, next, 0);
}

void PlaneGraph::assign_regions(const std::vector<RegionId>& face_region, int region_count,
                                RegionId outer_region) {
  regions_.assign(region_count, Region{});
  for (int r = 0; r < region_count; ++r) regions_[r].id = r;
  for (Face& f : faces_) {
    f.region = face_region[f.id];
    regions_[f.region].walks.push_back(f.id);
  }
  outer_region_ = outer_region;
  finish_faces();
}

void PlaneGraph::finish_faces() {
  candidates_.clear();
  std::map<std::array<EdgeId, 3>, TriangleId> by_edges;
  for (Face& f : faces_) {
    f.is_outer = f.region == outer_region_;
    f.is_triangle = false;
    if (f.length() != 3 || regions_[f.region].walks.size() != 1) continue;
    std::array<Vertex, 3> vs{};
    std::array<EdgeId, 3> es{};
    for (int i = 0; i < 3; ++i) {
      vs[i] = darts_[f.boundary[i]].origin;
      es[i] = darts_[f.boundary[i]].edge;
    }
    if (vs[0] == vs[1] || vs[1] == vs[2] || vs[0] == vs[2]) continue;
    f.is_triangle = true;
    std::sort(vs.begin(), vs.end());
    std::array<EdgeId, 3> key = es;
    std::sort(key.begin(), key.end());
    auto it = by_edges.find(key);
    if (it == by_edges.end()) {
      Triangle t;
      t.id = static_cast<TriangleId>(candidates_.size());
      t.vertices = vs;
      t.edges = {*find_edge(vs[0], vs[1]), *find_edge(vs[1], vs[2]), *find_edge(vs[0], vs[2])};
      t.faces.push_back(f.id);
      by_edges.emplace(key, t.id);
      candidates_.push_back(std::move(t));
    } else {
      candidates_[it->second].faces.push_back(f.id);
    }
  }
  for (Triangle& t : candidates_) {
    t.primary_face = t.faces.front();
    for (FaceId f : t.faces) {
      if (!faces_[f].is_outer) {
        t.primary_face = f;
        break;
      }
    }
  }
}

PlaneGraph PlaneGraph::from_rotation(int n, std::vector<std::vector<Vertex>> rotations,
                                     std::optional<std::pair<Vertex, Vertex>> outer) {
  validate_rotations(n, rotations);
  PlaneGraph g;
  g.n_ = n;
  g.rotations_ = std::move(rotations);
  g.build_darts_and_faces();
  g.validate_euler();
  if (g.edge_count() > 0) {
    if (!outer) throw Error(ErrorCode::bad_outer_designator, "graph has edges but no outer dart");
    auto d = g.find_dart(outer->first, outer->second);
    if (!d) {
      throw Error(ErrorCode::bad_outer_designator,
                  "dart " + edge_name(outer->first, outer->second) + " does not exist");
    }
    g.outer_dart_ = *d;
  } else if (outer) {
    throw Error(ErrorCode::bad_outer_designator, "graph has no edges");
  }
  g.assign_default_regions();
  return g;
}

PlaneGraph PlaneGraph::from_faces(int n, const std::vector<std::vector<Vertex>>& faces,
                                  std::pair<Vertex, Vertex> outer) {
  if (n < 0) throw Error(ErrorCode::malformed_input, "negative vertex count");
  // succ[v][prev] = next means: in the ccw rotation at v, next follows prev.
  std::vector<std::map<Vertex, Vertex>> succ(n);
  for (const auto& cycle : faces) {
    const std::size_t k = cycle.size();
    if (k < 2) throw Error(ErrorCode::malformed_input, "face cycle shorter than 2");
    for (std::size_t j = 0; j < k; ++j) {
      Vertex prev = cycle[(j + k - 1) % k];
      Vertex cur = cycle[j];
      Vertex next = cycle[(j + 1) % k];
      if (cur < 0 || cur >= n) throw Error(ErrorCode::malformed_input, "face vertex out of range");
      if (!succ[cur].emplace(prev, next).second) {
        throw Error(ErrorCode::malformed_input,
                    "directed edge " + edge_name(prev, cur) + " used by two faces");
      }
    }
  }
  std::vector<std::vector<Vertex>> rotations(n);
  for (Vertex v = 0; v < n; ++v) {
    if (succ[v].empty()) continue;
    const Vertex start = succ[v].begin()->first;
    Vertex x = start;
    do {
      rotations[v].push_back(x);
      auto it = succ[v].find(x);
      if (it == succ[v].end()) {
        throw Error(ErrorCode::malformed_input,
                    "faces around vertex " + std::to_string(v) + " do not close up");
      }
      x = it->second;
    } while (x != start && rotations[v].size() <= succ[v].size());
    if (rotations[v].size() != succ[v].size()) {
      throw Error(ErrorCode::malformed_input,
                  "faces around vertex " + std::to_string(v) + " form more than one fan");
    }
  }
  return from_rotation(n, std::move(rotations), outer);
}

PlaneGraph PlaneGraph::with_outer(DartId outer) const {
  const Dart& d = darts_.at(outer);
  return from_rotation(n_, rotations_, std::make_pair(d.origin, d.target));
}

TriangleCounts triangular_faces(const PlaneGraph& g) {
  TriangleCounts counts;
  for (const Face& f : g.faces()) {
    if (!f.is_triangle) continue;
    ++counts.all;
    if (!f.is_outer) ++counts.internal;
  }
  return counts;
}

int missing_edges(const PlaneGraph& g) {
  if (g.vertex_count() < 3) {
    throw Error(ErrorCode::too_few_vertices, "need at least 3 vertices, got " +
                                                 std::to_string(g.vertex_count()));
  }
  if (g.component_count() != 1) {
    throw Error(ErrorCode::disconnected, std::to_string(g.component_count()) + " components");
  }
  return 3 * g.vertex_count() - 6 - g.edge_count();
}

struct SubgraphBuilder {
  static Subgraph build(const PlaneGraph& g, const std::vector<bool>& keep_vertex,
                        const std::vector<bool>& keep_edge) {
    const int n = g.vertex_count();
    Subgraph sub;
    sub.vertex_from_parent.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
      if (keep_vertex[v]) {
        sub.vertex_from_parent[v] = static_cast<Vertex>(sub.vertex_to_parent.size());
        sub.vertex_to_parent.push_back(v);
      }
    }
    auto kept = [&](EdgeId e) {
      auto [u, v] = g.edge_endpoints(e);
      return keep_edge[e] && keep_vertex[u] && keep_vertex[v];
    };

    PlaneGraph& h = sub.graph;
    h.n_ = static_cast<int>(sub.vertex_to_parent.size());
    h.rotations_.assign(h.n_, {});
    for (Vertex hv = 0; hv < h.n_; ++hv) {
      Vertex v = sub.vertex_to_parent[hv];
      for (Vertex w : g.rotation(v)) {
        if (kept(*g.find_edge(v, w))) h.rotations_[hv].push_back(sub.vertex_from_parent[w]);
      }
    }
    h.build_darts_and_faces();

    sub.dart_to_parent.resize(h.dart_count());
    for (const Dart& d : h.darts()) {
      sub.dart_to_parent[d.id] =
          *g.find_dart(sub.vertex_to_parent[d.origin], sub.vertex_to_parent[d.target]);
    }
    sub.edge_to_parent.resize(h.edge_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      sub.edge_to_parent[e] = g.dart(sub.dart_to_parent[h.edge_dart(e)]).edge;
    }

    // Deleting an edge merges the parent regions on its two sides.
    DisjointSets merged(g.region_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (kept(e)) continue;
      const Dart& d = g.dart(g.edge_dart(e));
      merged.unite(g.face(d.face).region, g.face(g.dart(d.twin).face).region);
    }
    std::vector<RegionId> class_id(g.region_count(), -1);
    int region_count = 0;
    std::vector<RegionId> face_region(h.face_count());
    for (const Face& f : h.faces()) {
      DartId parent = sub.dart_to_parent[f.boundary.front()];
      int root = merged.find(g.face(g.dart(parent).face).region);
      if (class_id[root] == -1) class_id[root] = region_count++;
      face_region[f.id] = class_id[root];
    }
    for (RegionId r = 0; r < g.region_count(); ++r) {
      int root = merged.find(r);
      if (class_id[root] == -1) class_id[root] = region_count++;
    }
    const RegionId outer = class_id[merged.find(g.outer_region())];

    sub.provenance.outer_region = outer;
    sub.provenance.parent_faces.assign(region_count, {});
    for (const Face& f : g.faces()) {
      sub.provenance.parent_faces[class_id[merged.find(f.region)]].push_back(f.id);
    }
    for (const Face& f : h.faces()) {
      if (face_region[f.id] == outer) {
        h.outer_dart_ = f.boundary.front();
        break;
      }
    }
    h.assign_regions(face_region, region_count, outer);
    return sub;
  }
};

Subgraph restrict_plane_graph(const PlaneGraph& g, const std::vector<bool>& keep_vertex,
                              const std::vector<bool>& keep_edge) {
  return SubgraphBuilder::build(g, keep_vertex, keep_edge);
}

Subgraph induced_plane_subgraph(const PlaneGraph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw Error(ErrorCode::empty_set, "induced subgraph of no vertices");
  std::vector<bool> keep(g.vertex_count(), false);
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.vertex_count()) {
      throw Error(ErrorCode::malformed_input, "vertex " + std::to_string(v) + " out of range");
    }
    keep[v] = true;
  }
  return SubgraphBuilder::build(g, keep, std::vector<bool>(g.edge_count(), true));
}

Subgraph edge_subgraph(const PlaneGraph& g, const std::vector<bool>& keep_edge) {
  return SubgraphBuilder::build(g, std::vector<bool>(g.vertex_count(), true), keep_edge);
}

}  // namespace cactus_forge
