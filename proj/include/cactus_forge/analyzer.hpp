#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cactus_forge/cactus.hpp"
#include "cactus_forge/half.hpp"
#include "cactus_forge/local_search.hpp"
#include "cactus_forge/plane_graph.hpp"

namespace cactus_forge {

// Bookkeeping for one cactus component S of a (graph, cactus) pair. Counts
// that the analysis treats as fractional are kept in Half units.

enum class EdgeKind { cactus, type0, type1, type2 };
const char* to_string(EdgeKind kind);

// Triangular face of G with exactly two vertices in S.
struct CrossTriangle {
  FaceId face = -1;
  EdgeId support = -1;   // the edge of G[S] on its boundary
  DartId side = -1;      // dart of `support` whose left face is this triangle
  Vertex landing_vertex = -1;
  int landing_component = -1;  // index into TriangularCactus::components()
};

struct EdgeClass {
  EdgeId edge = -1;
  Vertex u = -1, v = -1;  // u < v
  EdgeKind kind = EdgeKind::type0;
  TriangleId cactus_triangle = -1;  // set for cactus edges
  // cross_on_side[0]: cross triangle left of the dart u->v; [1]: of v->u.
  std::array<int, 2> cross_on_side{-1, -1};

  int supported() const { return (cross_on_side[0] >= 0) + (cross_on_side[1] >= 0); }
};

struct EdgeClassTable {
  std::vector<Vertex> component;  // S, ascending
  int component_index = -1;
  std::vector<int> component_of_vertex;  // over V(G)
  std::vector<EdgeClass> edges;          // edges of G[S], ascending edge id
  std::vector<CrossTriangle> crosses;    // ascending face id
  std::vector<int> class_of_edge;        // G edge -> index into edges, or -1
  std::vector<int> cross_of_face;        // G face -> index into crosses, or -1

  const EdgeClass* find(EdgeId e) const {
    return class_of_edge[e] < 0 ? nullptr : &edges[class_of_edge[e]];
  }
  int count(EdgeKind kind) const;
  bool contains(Vertex v) const { return component_of_vertex[v] == component_index; }
};

// Edge slots of a cactus triangle follow Triangle::edges: 0 = v0v1,
// 1 = v1v2, 2 = v0v2. The corner opposite slot s is kOppositeCorner[s].
inline constexpr std::array<int, 3> kOppositeCorner{2, 0, 1};

struct TriangleClass {
  TriangleId id = -1;
  std::array<Vertex, 3> vertices{};
  SplitComponents split;
  std::array<std::vector<EdgeId>, 3> bsets;  // type-1/2 edges between the slot's two parts
  std::array<int, 3> edge_support{};         // cross triangles on the cactus edge (0 or 1)
  std::array<int, 3> bset_support{};         // cross triangles on the B-set edges
  int type = 0;                              // slots with edge_support > 0
  bool heavy = false;
  int base_slot = -1;                        // heavy only
  Vertex free_vertex = -1;                   // heavy only

  int slot_support(int slot) const { return edge_support[slot] + bset_support[slot]; }
  int total_support() const { return slot_support(0) + slot_support(1) + slot_support(2); }
};

enum class SideRole { cactus_base, cactus_free, cactus_light, type1, type2 };
const char* to_string(SideRole role);

struct BoundarySide {
  DartId dart = -1;  // dart of G; the super-face lies to its left
  EdgeId edge = -1;
  SideRole role = SideRole::cactus_light;
  bool occupied = false;
  TriangleId triangle = -1;  // cactus sides only
};

struct SuperFaceRecord {
  RegionId region = -1;  // region of the skeleton
  std::vector<BoundarySide> boundary;
  std::vector<FaceId> contained_faces;  // faces of G inside the super-face
  int occ = 0, free = 0;
  int a1_occ = 0, a1_free = 0, a2 = 0;
  // Per-triangle counts; meaningful on all-heavy components only.
  int p0_base = 0, p1_base = 0, p0_free = 0, p1_free = 0;
  Half mu;
  int survive = 0;
  Half gain;
  bool is_outer = false;
  bool labelled = false;  // counts and labels below are set
  std::array<int, 3> label{};  // [p1_base + a2 + a1, a1_free, p0_base]
  // Strongly adjacent heavy pairs on this face whose free corners are adjacent in G.
  std::vector<std::array<TriangleId, 2>> friends;
  bool friendly = false;  // a [1,0,0], [1,1,0] or [2,0,0] face with a friend pair
  std::string bound_class;  // empty when no gain bound applies
  std::optional<Half> gain_bound;

  int length() const { return static_cast<int>(boundary.size()); }
  std::string label_ij() const;
  std::string label_ijk() const;
};

enum class VerdictKind {
  identity,     // must hold on any valid cactus
  bound,        // must hold on any 2-swap optimum
  conditional,  // must hold on all-heavy components of verified 2-swap optima
  structural,   // consequence of 2-swap optimality, checked as a diagnostic
  report,       // recorded, never asserted
};
enum class VerdictStatus { pass, fail, not_applicable };
const char* to_string(VerdictKind kind);
const char* to_string(VerdictStatus status);

struct Verdict {
  std::string name;
  VerdictKind kind = VerdictKind::report;
  VerdictStatus status = VerdictStatus::not_applicable;
  std::string relation;  // "==", "<=" or ">="
  Half lhs, rhs;
  std::string detail;    // first counterexample, or context when passing

  bool failed() const { return status == VerdictStatus::fail; }
};

struct ComponentReport {
  std::vector<Vertex> component;
  int component_index = -1;
  int p = 0, q = 0;
  std::array<int, 4> p_type{};  // p0..p3
  std::array<int, 3> a_type{};  // a0..a2
  int crosses = 0;
  int outer_length = 0;    // length of the outer walk of G[S]
  int outer_occupied = 0;
  int phi = 0;
  bool all_heavy = false;
  bool verified_optimal = false;
  bool outer_is_cactus_face = false;  // G's outer face is a cactus triangle of S
  int superface_count = 0;
  Half mu_sum, gain_sum;
  int survive_sum = 0;
  std::vector<SuperFaceRecord> superfaces;
  std::vector<TriangleClass> triangles;
  EdgeClassTable edges;
  std::vector<Verdict> verdicts;

  const Verdict* verdict(std::string_view name) const;
  bool any_failed(VerdictKind kind) const;
};

struct AnalyzerOptions {
  // Throw NotLocallyOptimalInput when a structural check fails and the
  // cactus is not 2-swap optimal.
  bool strict_structure = true;
  bool throw_on_identity_violation = true;
  // Skip the 2-swap verification when the caller already knows the answer.
  std::optional<bool> known_optimal;
};

struct AnalysisReport {
  std::vector<ComponentReport> components;  // non-singleton components only
  int singleton_count = 0;
  int f3_all = 0;
  int q_sum = 0;
  bool verified_optimal = false;
  std::optional<SwapMove> optimality_witness;
  std::vector<Verdict> verdicts;  // whole-graph checks

  bool any_failed(VerdictKind kind) const;
};

// Throws NotAComponent unless `component` is exactly one cactus component.
EdgeClassTable classify_edges(const PlaneGraph& g, const TriangularCactus& cactus,
                              std::span<const Vertex> component);

std::vector<TriangleClass> classify_triangles(const PlaneGraph& g, const TriangularCactus& cactus,
                                              const EdgeClassTable& edges);

// H[S] = G[S] minus type-0 edges, with the map from G darts/faces into it.
struct Skeleton {
  Subgraph graph;
  std::vector<RegionId> region_of_face;   // G face -> skeleton region, -1 outside G[S] regions
  std::vector<DartId> dart_from_parent;   // G dart -> skeleton dart, -1 when absent
  std::vector<RegionId> cactus_regions;   // one per triangle class
  std::vector<RegionId> superfaces;       // ascending
  RegionId outer_superface = -1;          // -1 when G's outer face is a cactus face
};

Skeleton skeleton(const PlaneGraph& g, const EdgeClassTable& edges,
                  const std::vector<TriangleClass>& triangles);

std::vector<SuperFaceRecord> superface_stats(const PlaneGraph& g, const EdgeClassTable& edges,
                                             const std::vector<TriangleClass>& triangles,
                                             const Skeleton& h);

ComponentReport component_report(const PlaneGraph& g, const TriangularCactus& cactus,
                                 std::span<const Vertex> component,
                                 const AnalyzerOptions& options = {});

AnalysisReport analyze(const PlaneGraph& g, const TriangularCactus& cactus,
                       const AnalyzerOptions& options = {});

}  // namespace cactus_forge
