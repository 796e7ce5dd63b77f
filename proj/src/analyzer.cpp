#include "cactus_forge/analyzer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cactus_forge/error.hpp"

namespace cactus_forge {

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::cactus: return "cactus";
    case EdgeKind::type0: return "type0";
    case EdgeKind::type1: return "type1";
    case EdgeKind::type2: return "type2";
  }
  return "?";
}

const char* to_string(SideRole role) {
  switch (role) {
    case SideRole::cactus_base: return "cactus_base";
    case SideRole::cactus_free: return "cactus_free";
    case SideRole::cactus_light: return "cactus_light";
    case SideRole::type1: return "type1";
    case SideRole::type2: return "type2";
  }
  return "?";
}

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::identity: return "identity";
    case VerdictKind::bound: return "bound";
    case VerdictKind::conditional: return "conditional";
    case VerdictKind::structural: return "structural";
    case VerdictKind::report: return "report";
  }
  return "?";
}

const char* to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::pass: return "pass";
    case VerdictStatus::fail: return "fail";
    case VerdictStatus::not_applicable: return "n/a";
  }
  return "?";
}

int EdgeClassTable::count(EdgeKind kind) const {
  return static_cast<int>(
      std::count_if(edges.begin(), edges.end(), [&](const EdgeClass& e) { return e.kind == kind; }));
}

std::string SuperFaceRecord::label_ij() const {
  if (!labelled) return "";
  return "[" + std::to_string(label[0]) + "," + std::to_string(label[1]) + "]";
}

std::string SuperFaceRecord::label_ijk() const {
  if (!labelled) return "";
  return "[" + std::to_string(label[0]) + "," + std::to_string(label[1]) + "," +
         std::to_string(label[2]) + "]";
}

const Verdict* ComponentReport::verdict(std::string_view name) const {
  for (const Verdict& v : verdicts) {
    if (v.name == name) return &v;
  }
  return nullptr;
}

bool ComponentReport::any_failed(VerdictKind kind) const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [&](const Verdict& v) { return v.kind == kind && v.failed(); });
}

bool AnalysisReport::any_failed(VerdictKind kind) const {
  for (const Verdict& v : verdicts) {
    if (v.kind == kind && v.failed()) return true;
  }
  return std::any_of(components.begin(), components.end(),
                     [&](const ComponentReport& c) { return c.any_failed(kind); });
}

namespace {

// Slot of the cactus edge joining split parts x != y.
int slot_of_parts(int x, int y) { return (3 - x - y + 1) % 3; }

int slot_of_edge(const Triangle& t, EdgeId e) {
  for (int s = 0; s < 3; ++s) {
    if (t.edges[s] == e) return s;
  }
  return -1;
}

std::string show(std::array<Vertex, 3> v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

std::string show_edge(const PlaneGraph& g, EdgeId e) {
  auto [u, v] = g.edge_endpoints(e);
  return std::to_string(u) + "-" + std::to_string(v);
}

// First failing instance plus a count.
struct Violations {
  int count = 0;
  std::string first;

  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
};

Verdict compare(std::string name, VerdictKind kind, Half lhs, const std::string& relation,
                Half rhs, std::string detail = {}) {
  Verdict v;
  v.name = std::move(name);
  v.kind = kind;
  v.relation = relation;
  v.lhs = lhs;
  v.rhs = rhs;
  v.detail = std::move(detail);
  bool ok = relation == "==" ? lhs == rhs : relation == "<=" ? lhs <= rhs : lhs >= rhs;
  v.status = ok ? VerdictStatus::pass : VerdictStatus::fail;
  return v;
}

Verdict skipped(std::string name, VerdictKind kind, std::string why) {
  Verdict v;
  v.name = std::move(name);
  v.kind = kind;
  v.detail = std::move(why);
  return v;
}

Verdict from_violations(std::string name, VerdictKind kind, const Violations& found) {
  return compare(std::move(name), kind, Half::whole(found.count), "==", Half::whole(0), found.first);
}

Half halves(std::int64_t h) { return Half::from_halves(h); }
Half whole(std::int64_t w) { return Half::whole(w); }

// Part index (0..2) of every vertex of S for one split.
std::vector<int> part_index(const SplitComponents& split, int n) {
  std::vector<int> part(n, -1);
  for (int i = 0; i < 3; ++i) {
    for (Vertex v : split.parts[i]) part[v] = i;
  }
  return part;
}

// Dart of cactus edge e that faces away from its triangle.
DartId outward_dart(const PlaneGraph& g, const Triangle& t, EdgeId e) {
  DartId d = g.edge_dart(e);
  return g.dart(d).face == t.primary_face ? g.dart(d).twin : d;
}

}  // namespace

EdgeClassTable classify_edges(const PlaneGraph& g, const TriangularCactus& cactus,
                              std::span<const Vertex> component) {
  const int n = g.vertex_count();
  std::vector<Vertex> s(component.begin(), component.end());
  std::sort(s.begin(), s.end());
  if (s.empty() || s.front() < 0 || s.back() >= n ||
      std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw Error(ErrorCode::not_a_component, "vertex set is empty, repeated or out of range");
  }
  EdgeClassTable table;
  table.component_of_vertex.assign(n, -1);
  const auto parts = cactus.components();
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    for (Vertex v : parts[i]) table.component_of_vertex[v] = i;
  }
  table.component_index = table.component_of_vertex[s.front()];
  if (parts[table.component_index] != s) {
    throw Error(ErrorCode::not_a_component,
                "set containing " + std::to_string(s.front()) + " is not a cactus component");
  }
  table.component = std::move(s);

  std::vector<TriangleId> triangle_of_edge(g.edge_count(), -1);
  for (TriangleId id : cactus.triangles()) {
    const Triangle& t = g.candidates()[id];
    if (!table.contains(t.vertices[0])) continue;
    for (EdgeId e : t.edges) triangle_of_edge[e] = id;
  }

  table.class_of_edge.assign(g.edge_count(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge_endpoints(e);
    if (!table.contains(u) || !table.contains(v)) continue;
    EdgeClass c;
    c.edge = e;
    c.u = u;
    c.v = v;
    c.cactus_triangle = triangle_of_edge[e];
    table.class_of_edge[e] = static_cast<int>(table.edges.size());
    table.edges.push_back(c);
  }

  table.cross_of_face.assign(g.face_count(), -1);
  for (const Face& f : g.faces()) {
    if (!f.is_triangle) continue;
    int inside = 0;
    for (DartId d : f.boundary) inside += table.contains(g.dart(d).origin);
    if (inside != 2) continue;
    CrossTriangle x;
    x.face = f.id;
    for (DartId d : f.boundary) {
      const Dart& dart = g.dart(d);
      if (table.contains(dart.origin) && table.contains(dart.target)) {
        x.support = dart.edge;
        x.side = d;
      }
      if (!table.contains(dart.origin)) x.landing_vertex = dart.origin;
    }
    x.landing_component = table.component_of_vertex[x.landing_vertex];
    EdgeClass& c = table.edges[table.class_of_edge[x.support]];
    const int side = g.dart(x.side).origin == c.u ? 0 : 1;
    c.cross_on_side[side] = static_cast<int>(table.crosses.size());
    table.cross_of_face[f.id] = static_cast<int>(table.crosses.size());
    table.crosses.push_back(x);
  }

  for (EdgeClass& c : table.edges) {
    if (c.cactus_triangle >= 0) {
      c.kind = EdgeKind::cactus;
    } else {
      c.kind = std::array{EdgeKind::type0, EdgeKind::type1, EdgeKind::type2}[c.supported()];
    }
  }
  return table;
}

std::vector<TriangleClass> classify_triangles(const PlaneGraph& g, const TriangularCactus& cactus,
                                              const EdgeClassTable& edges) {
  std::vector<TriangleClass> out;
  for (TriangleId id : cactus.triangles()) {
    const Triangle& t = g.candidates()[id];
    if (!edges.contains(t.vertices[0])) continue;
    TriangleClass tc;
    tc.id = id;
    tc.vertices = t.vertices;
    tc.split = cactus.split_at(id);
    const std::vector<int> part = part_index(tc.split, g.vertex_count());
    for (int s = 0; s < 3; ++s) tc.edge_support[s] = edges.find(t.edges[s])->supported();
    for (const EdgeClass& c : edges.edges) {
      if (c.kind != EdgeKind::type1 && c.kind != EdgeKind::type2) continue;
      const int x = part[c.u], y = part[c.v];
      if (x == y) continue;
      const int s = slot_of_parts(x, y);
      tc.bsets[s].push_back(c.edge);
      tc.bset_support[s] += c.supported();
    }
    tc.type = static_cast<int>(std::count_if(tc.edge_support.begin(), tc.edge_support.end(),
                                             [](int k) { return k > 0; }));
    bool concentrated = false;
    for (int s = 0; s < 3; ++s) {
      if (tc.slot_support(s) >= 3 && tc.total_support() == tc.slot_support(s)) concentrated = true;
    }
    tc.heavy = tc.total_support() >= 4 || concentrated;
    if (tc.heavy) {
      // Base: the slot with a non-empty B-set; ties and the degenerate case
      // fall back to the most supported slot, lowest index first.
      int best = -1;
      for (int s = 0; s < 3; ++s) {
        if (tc.bsets[s].empty()) continue;
        if (best < 0 || tc.slot_support(s) > tc.slot_support(best)) best = s;
      }
      if (best < 0) {
        best = 0;
        for (int s = 1; s < 3; ++s) {
          if (tc.slot_support(s) > tc.slot_support(best)) best = s;
        }
      }
      tc.base_slot = best;
      tc.free_vertex = t.vertices[kOppositeCorner[best]];
    }
    out.push_back(std::move(tc));
  }
  return out;
}

Skeleton skeleton(const PlaneGraph& g, const EdgeClassTable& edges,
                  const std::vector<TriangleClass>& triangles) {
  std::vector<bool> keep_vertex(g.vertex_count(), false);
  for (Vertex v : edges.component) keep_vertex[v] = true;
  std::vector<bool> keep_edge(g.edge_count(), false);
  for (const EdgeClass& c : edges.edges) keep_edge[c.edge] = c.kind != EdgeKind::type0;

  Skeleton h;
  h.graph = restrict_plane_graph(g, keep_vertex, keep_edge);
  const FaceProvenance& prov = h.graph.provenance;
  h.region_of_face.assign(g.face_count(), -1);
  for (RegionId r = 0; r < static_cast<int>(prov.parent_faces.size()); ++r) {
    for (FaceId f : prov.parent_faces[r]) h.region_of_face[f] = r;
  }
  h.dart_from_parent.assign(g.dart_count(), -1);
  for (DartId d = 0; d < h.graph.graph.dart_count(); ++d) {
    h.dart_from_parent[h.graph.dart_to_parent[d]] = d;
  }
  std::vector<bool> is_cactus(h.graph.graph.region_count(), false);
  for (const TriangleClass& tc : triangles) {
    RegionId r = h.region_of_face[g.candidates()[tc.id].primary_face];
    h.cactus_regions.push_back(r);
    is_cactus[r] = true;
  }
  for (RegionId r = 0; r < h.graph.graph.region_count(); ++r) {
    if (!is_cactus[r]) h.superfaces.push_back(r);
  }
  if (!is_cactus[prov.outer_region]) h.outer_superface = prov.outer_region;
  return h;
}

namespace {

RegionId side_region(const Skeleton& h, DartId parent_dart) {
  const PlaneGraph& hg = h.graph.graph;
  return hg.face(hg.dart(h.dart_from_parent[parent_dart]).face).region;
}

// Gain lower bound for an inner super-face of an all-heavy component.
std::pair<std::string, Half> inner_bound(const SuperFaceRecord& f) {
  const auto [i, j, k] = f.label;
  if (i == 1 && j == 0) {
    if (k > 0) return {"[1,0,>=1]", halves(5)};
    return f.friendly ? std::pair{std::string("[1,0,0] friendly"), halves(5)}
                      : std::pair{std::string("[1,0,0] non-friendly"), halves(9)};
  }
  if (i == 1 && j == 1) {
    if (k > 0) return {"[1,1,>=1]", whole(2)};
    return f.friendly ? std::pair{std::string("[1,1,0] friendly"), whole(2)}
                      : std::pair{std::string("[1,1,0] non-friendly"), whole(4)};
  }
  if (i == 2 && j == 0) {
    if (k > 0) return {"[2,0,>=1]", whole(2)};
    return f.friendly ? std::pair{std::string("[2,0,0] friendly"), whole(2)}
                      : std::pair{std::string("[2,0,0] non-friendly"), whole(3)};
  }
  if (i == 2 && j == 1) return {"[2,1,*]", halves(5)};
  if (i == 2 && j == 2) return {"[2,2,*]", whole(2)};
  if (i >= 3) return {"[>=3,*,*]", halves(3)};
  return {"inner", halves(3)};
}

}  // namespace

std::vector<SuperFaceRecord> superface_stats(const PlaneGraph& g, const EdgeClassTable& edges,
                                             const std::vector<TriangleClass>& triangles,
                                             const Skeleton& h) {
  std::map<TriangleId, const TriangleClass*> by_id;
  for (const TriangleClass& tc : triangles) by_id[tc.id] = &tc;
  const bool all_heavy = !triangles.empty() &&
                         std::all_of(triangles.begin(), triangles.end(),
                                     [](const TriangleClass& tc) { return tc.heavy; });
  const PlaneGraph& hg = h.graph.graph;
  auto in_s = [&](FaceId f) {
    for (Vertex v : g.face_vertices(f)) {
      if (!edges.contains(v)) return false;
    }
    return true;
  };

  std::vector<SuperFaceRecord> out;
  for (RegionId r : h.superfaces) {
    SuperFaceRecord rec;
    rec.region = r;
    rec.is_outer = r == h.outer_superface;
    std::set<TriangleId> base[2], free_side[2];  // indexed by triangle type 0/1
    for (FaceId w : hg.regions()[r].walks) {
      const auto& walk = hg.face(w).boundary;
      for (DartId hd : walk) {
        BoundarySide side;
        side.dart = h.graph.dart_to_parent[hd];
        side.edge = g.dart(side.dart).edge;
        side.occupied = edges.cross_of_face[g.dart(side.dart).face] >= 0;
        const EdgeClass& c = *edges.find(side.edge);
        if (c.kind == EdgeKind::cactus) {
          const TriangleClass& tc = *by_id.at(c.cactus_triangle);
          side.triangle = tc.id;
          if (!tc.heavy) {
            side.role = SideRole::cactus_light;
          } else {
            const int slot = slot_of_edge(g.candidates()[tc.id], side.edge);
            side.role = slot == tc.base_slot ? SideRole::cactus_base : SideRole::cactus_free;
            if (tc.type <= 1) {
              (side.role == SideRole::cactus_base ? base : free_side)[tc.type].insert(tc.id);
            }
          }
        } else if (c.kind == EdgeKind::type1) {
          side.role = SideRole::type1;
          ++(side.occupied ? rec.a1_occ : rec.a1_free);
        } else {
          side.role = SideRole::type2;
          ++rec.a2;
        }
        ++(side.occupied ? rec.occ : rec.free);
        rec.boundary.push_back(side);
      }
      if (!all_heavy) continue;
      // Consecutive darts x->v, v->y along free edges of two heavy triangles.
      for (std::size_t i = 0; i < walk.size(); ++i) {
        const Dart& a = g.dart(h.graph.dart_to_parent[walk[i]]);
        const Dart& b = g.dart(h.graph.dart_to_parent[walk[(i + 1) % walk.size()]]);
        const EdgeClass& ca = *edges.find(a.edge);
        const EdgeClass& cb = *edges.find(b.edge);
        if (ca.kind != EdgeKind::cactus || cb.kind != EdgeKind::cactus) continue;
        if (ca.cactus_triangle == cb.cactus_triangle) continue;
        const TriangleClass& ta = *by_id.at(ca.cactus_triangle);
        const TriangleClass& tb = *by_id.at(cb.cactus_triangle);
        if (a.origin != ta.free_vertex || b.target != tb.free_vertex) continue;
        if (g.adjacent(a.origin, b.target)) {
          rec.friends.push_back({std::min(ta.id, tb.id), std::max(ta.id, tb.id)});
        }
      }
    }
    rec.contained_faces = h.graph.provenance.parent_faces[r];
    for (FaceId f : rec.contained_faces) {
      if (g.face(f).is_triangle && in_s(f)) ++rec.survive;
    }
    rec.mu = halves(2 * rec.free + rec.occ);
    rec.gain = rec.mu - whole(rec.survive);
    if (all_heavy) {
      rec.labelled = true;
      rec.p0_base = static_cast<int>(base[0].size());
      rec.p1_base = static_cast<int>(base[1].size());
      rec.p0_free = static_cast<int>(free_side[0].size());
      rec.p1_free = static_cast<int>(free_side[1].size());
      rec.label = {rec.p1_base + rec.a2 + rec.a1_occ + rec.a1_free, rec.a1_free, rec.p0_base};
      const bool special = rec.label == std::array{1, 0, 0} || rec.label == std::array{1, 1, 0} ||
                           rec.label == std::array{2, 0, 0};
      rec.friendly = special && !rec.friends.empty();
      if (!rec.is_outer) {
        auto [name, bound] = inner_bound(rec);
        rec.bound_class = name;
        rec.gain_bound = bound;
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

// Checks that follow from 2-swap optimality. Each appends one verdict.
void structural_checks(const PlaneGraph& g, const EdgeClassTable& edges,
                       const std::vector<TriangleClass>& triangles, const Skeleton& h,
                       const std::vector<SuperFaceRecord>& faces, bool all_heavy,
                       std::vector<Verdict>& out) {
  const VerdictKind kind = VerdictKind::structural;
  auto landing = [&](int cross) { return edges.crosses[cross].landing_component; };

  Violations distinct_landing;
  for (const EdgeClass& c : edges.edges) {
    if (c.kind == EdgeKind::type2 && landing(c.cross_on_side[0]) == landing(c.cross_on_side[1])) {
      distinct_landing.add("type-2 edge " + show_edge(g, c.edge) + " lands twice in component " +
                           std::to_string(landing(c.cross_on_side[0])));
    }
  }
  out.push_back(from_violations("type2_landing_distinct", kind, distinct_landing));

  Violations cross_pairs, split_region, type3, type2, heavy, light, free_edges;
  for (const TriangleClass& tc : triangles) {
    const Triangle& t = g.candidates()[tc.id];
    const std::vector<int> part = part_index(tc.split, g.vertex_count());
    const std::string name = show(tc.vertices);

    // Cross triangles on edges between split parts, with their slot.
    std::vector<std::pair<int, int>> spanning;  // (cross, slot)
    for (int x = 0; x < static_cast<int>(edges.crosses.size()); ++x) {
      auto [u, v] = g.edge_endpoints(edges.crosses[x].support);
      if (part[u] != part[v]) spanning.emplace_back(x, slot_of_parts(part[u], part[v]));
    }
    bool pair_exists = false;
    for (auto [x1, s1] : spanning) {
      for (auto [x2, s2] : spanning) {
        if (x1 >= x2 || s1 == s2) continue;
        pair_exists = true;
        if (landing(x1) != landing(x2)) {
          cross_pairs.add("triangle " + name + ": cross triangles on slots " + std::to_string(s1) +
                          "," + std::to_string(s2) + " land in different components");
        }
      }
    }
    if (pair_exists) {
      for (int s = 0; s < 3; ++s) {
        bool bad = tc.bsets[s].size() > 1 || tc.slot_support(s) > 1;
        for (EdgeId e : tc.bsets[s]) bad = bad || edges.find(e)->kind != EdgeKind::type1;
        if (bad) cross_pairs.add("triangle " + name + ": slot " + std::to_string(s) + " overloaded");
      }
    }

    for (int s1 = 0; s1 < 3; ++s1) {
      for (int s2 = s1 + 1; s2 < 3; ++s2) {
        if (tc.edge_support[s1] && tc.edge_support[s2] &&
            (!tc.bsets[s1].empty() || !tc.bsets[s2].empty())) {
          split_region.add("triangle " + name + ": supporting slots " + std::to_string(s1) + "," +
                           std::to_string(s2) + " have B-edges");
        }
      }
    }
    if (tc.type == 3 && tc.heavy) type3.add("type-3 triangle " + name + " is heavy");
    if (tc.type == 2 && tc.heavy) type2.add("type-2 triangle " + name + " is heavy");

    auto others_empty = [&](int s) {
      return tc.bsets[(s + 1) % 3].empty() && tc.bsets[(s + 2) % 3].empty();
    };
    if (tc.heavy) {
      bool ok = false;
      if (tc.type == 1) {
        const int s = static_cast<int>(
            std::find(tc.edge_support.begin(), tc.edge_support.end(), 1) - tc.edge_support.begin());
        ok = others_empty(s) && tc.bset_support[s] >= 2;
      } else if (tc.type == 0) {
        for (int s = 0; s < 3; ++s) ok = ok || (others_empty(s) && tc.bset_support[s] >= 3);
      }
      if (!ok) heavy.add("heavy type-" + std::to_string(tc.type) + " triangle " + name);

      RegionId first = -1;
      for (int s = 0; s < 3; ++s) {
        if (s == tc.base_slot) continue;
        RegionId r = side_region(h, outward_dart(g, t, t.edges[s]));
        if (first < 0) first = r;
        if (r != first) free_edges.add("free edges of " + name + " bound different super-faces");
      }
    } else {
      for (int s = 0; s < 3; ++s) {
        if (!others_empty(s)) continue;
        if (tc.type == 0 && tc.bset_support[s] > 2) light.add("light type-0 " + name);
        if (tc.type == 1 && tc.edge_support[s] == 1 && tc.bset_support[s] > 1) {
          light.add("light type-1 " + name);
        }
      }
      int active = 0;
      for (int s = 0; s < 3; ++s) active += tc.slot_support(s) > 0;
      const int total = tc.total_support();
      if (active >= 2 && total >= 2 && total <= 3) {
        std::set<int> lands;
        for (auto [x, s] : spanning) lands.insert(landing(x));
        bool ok = lands.size() <= 1;
        for (int s = 0; s < 3; ++s) ok = ok && tc.slot_support(s) <= 1;
        if (!ok) light.add("light " + name + " with spread support");
      }
    }
  }
  out.push_back(from_violations("split_cross_pairs", kind, cross_pairs));
  out.push_back(from_violations("split_region", kind, split_region));
  out.push_back(from_violations("type3_light", kind, type3));
  out.push_back(from_violations("type2_light", kind, type2));
  out.push_back(from_violations("heavy_structure", kind, heavy));
  out.push_back(from_violations("light_structure", kind, light));
  out.push_back(from_violations("free_edges_same_superface", kind, free_edges));

  if (!all_heavy) {
    const std::string why = "component has a light triangle";
    out.push_back(skipped("superface_edge_partition", kind, why));
    out.push_back(skipped("friend_type1", kind, why));
    out.push_back(skipped("friend_base_sides", VerdictKind::report, why));
    return;
  }
  std::map<TriangleId, const TriangleClass*> by_id;
  for (const TriangleClass& tc : triangles) by_id[tc.id] = &tc;
  Violations partition, friend_type, friend_base;
  for (const SuperFaceRecord& f : faces) {
    const int p_free = f.p0_free + f.p1_free, p_base = f.p0_base + f.p1_base;
    const int a1 = f.a1_occ + f.a1_free;
    if (f.length() != 2 * p_free + p_base + f.a2 + a1 ||
        f.free != 2 * p_free + f.a1_free + f.p0_base || f.occ != f.a1_occ + f.a2 + f.p1_base) {
      partition.add("super-face " + std::to_string(f.region) + " sides do not split as expected");
    }
    for (auto [t1, t2] : f.friends) {
      const TriangleClass& a = *by_id.at(t1);
      const TriangleClass& b = *by_id.at(t2);
      const std::string pair = show(a.vertices) + "/" + show(b.vertices);
      if (a.type == 1 || b.type == 1) friend_type.add("friends " + pair + " include a type-1");
      auto base_region = [&](const TriangleClass& tc) {
        const Triangle& t = g.candidates()[tc.id];
        return side_region(h, outward_dart(g, t, t.edges[tc.base_slot]));
      };
      if (base_region(a) != base_region(b)) friend_base.add("friends " + pair + " base sides apart");
    }
  }
  out.push_back(from_violations("superface_edge_partition", kind, partition));
  out.push_back(from_violations("friend_type1", kind, friend_type));
  out.push_back(from_violations("friend_base_sides", VerdictKind::report, friend_base));
}

}  // namespace

ComponentReport component_report(const PlaneGraph& g, const TriangularCactus& cactus,
                                 std::span<const Vertex> component,
                                 const AnalyzerOptions& options) {
  ComponentReport r;
  r.edges = classify_edges(g, cactus, component);
  r.component = r.edges.component;
  r.component_index = r.edges.component_index;
  r.triangles = classify_triangles(g, cactus, r.edges);
  r.p = static_cast<int>(r.triangles.size());
  for (const TriangleClass& tc : r.triangles) ++r.p_type[tc.type];
  r.a_type = {r.edges.count(EdgeKind::type0), r.edges.count(EdgeKind::type1),
              r.edges.count(EdgeKind::type2)};
  r.crosses = static_cast<int>(r.edges.crosses.size());
  for (const Face& f : g.faces()) {
    if (!f.is_triangle) continue;
    int inside = 0;
    for (DartId d : f.boundary) inside += r.edges.contains(g.dart(d).origin);
    if (inside >= 2) ++r.q;
  }
  r.all_heavy = r.p > 0 && std::all_of(r.triangles.begin(), r.triangles.end(),
                                       [](const TriangleClass& tc) { return tc.heavy; });

  const Skeleton h = skeleton(g, r.edges, r.triangles);
  r.superfaces = superface_stats(g, r.edges, r.triangles, h);
  r.superface_count = static_cast<int>(r.superfaces.size());
  for (const SuperFaceRecord& f : r.superfaces) {
    r.mu_sum += f.mu;
    r.gain_sum += f.gain;
    r.survive_sum += f.survive;
  }
  r.outer_is_cactus_face = h.outer_superface < 0;

  // Outer walk of G[S]: the walks of the induced region holding G's outer face.
  const Subgraph induced = induced_plane_subgraph(g, r.component);
  const PlaneGraph& ig = induced.graph;
  for (FaceId w : ig.regions()[induced.provenance.outer_region].walks) {
    for (DartId d : ig.face(w).boundary) {
      ++r.outer_length;
      const DartId parent = induced.dart_to_parent[d];
      if (r.edges.cross_of_face[g.dart(parent).face] >= 0) ++r.outer_occupied;
    }
  }
  r.phi = r.outer_length - r.outer_occupied;
  for (SuperFaceRecord& f : r.superfaces) {
    if (f.is_outer && f.labelled) {
      f.bound_class = "outer";
      f.gain_bound = whole(r.phi - 1);
    }
  }

  r.verified_optimal = options.known_optimal.has_value()
                           ? *options.known_optimal
                           : verify_local_optimality(g, cactus, 2).optimal;

  const int p = r.p, q = r.q;
  const auto [p0, p1, p2, p3] = r.p_type;
  const int a1 = r.a_type[1], a2 = r.a_type[2];
  const int cactus_support = p1 + 2 * p2 + 3 * p3;
  std::vector<Verdict>& v = r.verdicts;

  v.push_back(compare("accounting_identity", VerdictKind::identity, whole(q), "==",
                      whole(p + cactus_support + a1 + 2 * a2 + r.survive_sum)));
  v.push_back(compare("mu_sum", VerdictKind::identity, r.mu_sum, "==",
                      halves(6 * p - cactus_support + 3 * a1 + 2 * a2)));
  v.push_back(compare("superface_count", VerdictKind::identity, whole(r.superface_count), "==",
                      whole(a1 + a2 + 1)));
  v.push_back(compare("weak_bound",
                      r.verified_optimal ? VerdictKind::bound : VerdictKind::report, whole(q),
                      "<=", whole(6 * p)));
  v.push_back(compare("gain_equation", VerdictKind::report, whole(q), "<=",
                      halves(8 * p + p1 + 5 * a1 + 6 * a2) - r.gain_sum));

  const bool gated = r.all_heavy && r.verified_optimal;
  const std::string why = !r.all_heavy ? "component has a light triangle"
                                       : "cactus is not verified 2-swap optimal";
  const VerdictKind cond = VerdictKind::conditional;
  if (gated && p >= 2) {
    v.push_back(compare("superface_bound", cond, whole(r.superface_count), "<=", whole(2 * p - 2)));
  } else {
    v.push_back(skipped("superface_bound", cond, gated ? "p < 2" : why));
  }
  if (gated) {
    v.push_back(compare("mu_sum_heavy", cond, r.mu_sum, "==", halves(6 * p - p1 + 3 * a1 + 2 * a2)));
    Violations table;
    Half worst_gain, worst_bound;
    for (const SuperFaceRecord& f : r.superfaces) {
      if (f.is_outer || !f.gain_bound || f.gain >= *f.gain_bound) continue;
      if (table.count == 0) {
        worst_gain = f.gain;
        worst_bound = *f.gain_bound;
      }
      table.add("super-face " + std::to_string(f.region) + " " + f.bound_class + ": gain " +
                f.gain.str() + " < " + f.gain_bound->str());
    }
    Verdict t = from_violations("gain_table", cond, table);
    if (table.count > 0) {
      t.relation = ">=";
      t.lhs = worst_gain;
      t.rhs = worst_bound;
    }
    v.push_back(t);
  } else {
    v.push_back(skipped("mu_sum_heavy", cond, why));
    v.push_back(skipped("gain_table", cond, why));
  }
  const SuperFaceRecord* outer = nullptr;
  for (const SuperFaceRecord& f : r.superfaces) {
    if (f.is_outer) outer = &f;
  }
  if (gated && outer) {
    v.push_back(compare("outer_gain", cond, outer->gain, ">=", whole(r.phi - 1)));
  } else {
    v.push_back(skipped("outer_gain", cond, outer ? why : "G's outer face is a cactus face of S"));
  }
  v.push_back(compare("phi_bound", gated && outer ? cond : VerdictKind::report, whole(q), "<=",
                      whole(6 * p - r.phi)));

  structural_checks(g, r.edges, r.triangles, h, r.superfaces, r.all_heavy, v);

  if (options.throw_on_identity_violation && r.any_failed(VerdictKind::identity)) {
    for (const Verdict& x : v) {
      if (x.kind == VerdictKind::identity && x.failed()) {
        throw Error(ErrorCode::identity_violation,
                    x.name + " on component of " + std::to_string(r.component.front()) + ": " +
                        x.lhs.str() + " " + x.relation + " " + x.rhs.str());
      }
    }
  }
  if (options.strict_structure && !r.verified_optimal && r.any_failed(VerdictKind::structural)) {
    for (const Verdict& x : v) {
      if (x.kind == VerdictKind::structural && x.failed()) {
        throw Error(ErrorCode::not_locally_optimal_input, x.name + ": " + x.detail);
      }
    }
  }
  return r;
}

AnalysisReport analyze(const PlaneGraph& g, const TriangularCactus& cactus,
                       const AnalyzerOptions& options) {
  AnalysisReport report;
  AnalyzerOptions per_component = options;
  if (options.known_optimal.has_value()) {
    report.verified_optimal = *options.known_optimal;
  } else {
    OptimalityCheck check = verify_local_optimality(g, cactus, 2);
    report.verified_optimal = check.optimal;
    report.optimality_witness = check.witness;
  }
  per_component.known_optimal = report.verified_optimal;
  report.f3_all = triangular_faces(g).all;
  for (const auto& part : cactus.components()) {
    if (part.size() == 1) {
      ++report.singleton_count;
      continue;
    }
    report.components.push_back(component_report(g, cactus, part, per_component));
    report.q_sum += report.components.back().q;
  }
  if (report.verified_optimal) {
    report.verdicts.push_back(compare("q_sum_equals_f3", VerdictKind::identity,
                                      whole(report.q_sum), "==", whole(report.f3_all)));
  } else {
    report.verdicts.push_back(
        skipped("q_sum_equals_f3", VerdictKind::identity, "cactus is not verified 2-swap optimal"));
  }
  if (options.throw_on_identity_violation && report.verdicts.back().failed()) {
    throw Error(ErrorCode::identity_violation,
                "sum of q is " + std::to_string(report.q_sum) + ", f3 is " +
                    std::to_string(report.f3_all));
  }
  return report;
}

}  // namespace cactus_forge
