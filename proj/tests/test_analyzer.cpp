#include <algorithm>
#include <set>

#include "cactus_forge/analyzer.hpp"
#include "cactus_forge/error.hpp"
#include "cactus_forge/generators.hpp"
#include "cactus_forge/local_search.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cactus_forge;

namespace {

// Two triangles (0,1,2) and (2,3,4) meeting at 2. Edge 1-3 runs below 2 and
// carries cross triangles on both sides, landing on singletons 5 and 6.
PlaneGraph bowtie_with_bridge() {
  return PlaneGraph::from_faces(7,
                                {{0, 1, 2},
                                 {2, 3, 4},
                                 {1, 5, 2},
                                 {5, 3, 2},
                                 {1, 3, 5},
                                 {1, 6, 3},
                                 {0, 2, 4, 3, 6, 1}},
                                {0, 2});
}

TriangularCactus cactus_of(const PlaneGraph& g, std::vector<std::array<Vertex, 3>> triples) {
  return TriangularCactus::from_vertex_triples(g, triples);
}

// Counts recomputed from the faces alone, without the analyzer's tables.
struct BruteCounts {
  int q = 0;
  int crosses = 0;
  int inside = 0;  // triangular faces with all corners in S
  int cactus_edge_support = 0;
  int other_edge_support = 0;
  std::array<int, 3> other_edges_by_support{};
};

BruteCounts brute_counts(const PlaneGraph& g, const TriangularCactus& c, const std::vector<Vertex>& comp) {
  std::set<Vertex> s(comp.begin(), comp.end());
  BruteCounts out;
  std::vector<int> support(g.edge_count(), 0);
  for (const Face& f : g.faces()) {
    if (!f.is_triangle) continue;
    auto vs = g.face_vertices(f.id);
    const int in = static_cast<int>(std::count_if(vs.begin(), vs.end(), [&](Vertex v) { return s.count(v); }));
    if (in >= 2) ++out.q;
    if (in == 3) ++out.inside;
    if (in != 2) continue;
    ++out.crosses;
    for (int i = 0; i < 3; ++i) {
      const Vertex a = vs[i], b = vs[(i + 1) % 3];
      if (s.count(a) && s.count(b)) ++support[*g.find_edge(a, b)];
    }
  }
  std::set<EdgeId> cactus_edges;
  for (TriangleId t : c.triangles()) {
    for (EdgeId e : g.candidates()[t].edges) cactus_edges.insert(e);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge_endpoints(e);
    if (!s.count(a) || !s.count(b)) continue;
    if (cactus_edges.count(e)) {
      out.cactus_edge_support += support[e];
    } else {
      out.other_edge_support += support[e];
      ++out.other_edges_by_support[support[e]];
    }
  }
  return out;
}

// Heaviness from split parts: a cross counts towards the slot of the two
// parts holding its support edge's ends.
bool brute_heavy(const PlaneGraph& g, const TriangularCactus& c, TriangleId t, const std::vector<Vertex>& comp) {
  std::set<Vertex> s(comp.begin(), comp.end());
  SplitComponents split = c.split_at(t);
  std::array<int, 3> slot{};
  for (const Face& f : g.faces()) {
    if (!f.is_triangle) continue;
    auto vs = g.face_vertices(f.id);
    std::vector<Vertex> in;
    for (Vertex v : vs) {
      if (s.count(v)) in.push_back(v);
    }
    if (in.size() != 2) continue;
    const int x = split.part_of(in[0]), y = split.part_of(in[1]);
    if (x == y) continue;
    ++slot[(3 - x - y + 1) % 3];
  }
  const int total = slot[0] + slot[1] + slot[2];
  if (total >= 4) return true;
  return std::any_of(slot.begin(), slot.end(), [&](int k) { return k >= 3 && k == total; });
}

void check_against_brute_force(const PlaneGraph& g, const TriangularCactus& c, const AnalysisReport& rep) {
  int q_sum = 0;
  for (const ComponentReport& cr : rep.components) {
    BruteCounts b = brute_counts(g, c, cr.component);
    CHECK(cr.q == b.q);
    CHECK(cr.crosses == b.crosses);
    CHECK(cr.p + cr.survive_sum == b.inside);
    CHECK(cr.p_type[1] + 2 * cr.p_type[2] + 3 * cr.p_type[3] == b.cactus_edge_support);
    CHECK(cr.a_type[1] + 2 * cr.a_type[2] == b.other_edge_support);
    CHECK(cr.a_type == b.other_edges_by_support);
    CHECK(cr.phi >= 0);
    CHECK(cr.phi <= cr.outer_length);
    CHECK(cr.superface_count == cr.a_type[1] + cr.a_type[2] + 1);
    bool all_heavy = true;
    for (const TriangleClass& t : cr.triangles) {
      CHECK(t.heavy == brute_heavy(g, c, t.id, cr.component));
      all_heavy = all_heavy && t.heavy;
    }
    CHECK(cr.all_heavy == all_heavy);
    q_sum += cr.q;
  }
  CHECK(rep.q_sum == q_sum);
}

const SuperFaceRecord& outer_face(const ComponentReport& cr) {
  auto it = std::find_if(cr.superfaces.begin(), cr.superfaces.end(),
                         [](const SuperFaceRecord& f) { return f.is_outer; });
  REQUIRE(it != cr.superfaces.end());
  return *it;
}

}  // namespace

TEST_CASE("lone triangle") {
  PlaneGraph g = fixtures::triangle();
  TriangularCactus c = cactus_of(g, {{0, 1, 2}});
  AnalysisReport rep = analyze(g, c);
  REQUIRE(rep.components.size() == 1);
  const ComponentReport& cr = rep.components[0];
  CHECK(cr.p == 1);
  CHECK(cr.q == 2);
  CHECK(cr.crosses == 0);
  CHECK(cr.phi == 3);
  CHECK(cr.superface_count == 1);
  const SuperFaceRecord& f = outer_face(cr);
  CHECK(f.free == 3);
  CHECK(f.occ == 0);
  CHECK(f.mu == Half::whole(3));
  CHECK(f.survive == 1);
  CHECK(f.gain == Half::whole(2));
  CHECK(cr.verdict("accounting_identity")->status == VerdictStatus::pass);
  CHECK(cr.verdict("phi_bound")->status == VerdictStatus::pass);
  CHECK(rep.verdicts.front().name == "q_sum_equals_f3");
  CHECK_FALSE(rep.any_failed(VerdictKind::identity));
}

TEST_CASE("K4 with the fourth vertex outside the cactus triangle") {
  PlaneGraph g = fixtures::k4_apex_outside();
  TriangularCactus c = cactus_of(g, {{0, 1, 2}});
  AnalysisReport rep = analyze(g, c);
  REQUIRE(rep.verified_optimal);
  const ComponentReport& cr = rep.components[0];
  CHECK(cr.q == 4);
  CHECK(cr.crosses == 3);
  CHECK(cr.p_type == std::array<int, 4>{0, 0, 0, 1});
  CHECK(cr.phi == 0);
  CHECK_FALSE(cr.all_heavy);
  CHECK(cr.triangles[0].type == 3);
  const SuperFaceRecord& f = outer_face(cr);
  CHECK(f.occ == 3);
  CHECK(f.gain == Half::from_halves(3));
  CHECK(cr.verdict("type3_light")->status == VerdictStatus::pass);
  CHECK(cr.verdict("phi_bound")->status == VerdictStatus::pass);
  CHECK(cr.verdict("gain_table")->status == VerdictStatus::not_applicable);
}

TEST_CASE("K4 whose outer face is the cactus triangle") {
  PlaneGraph g = fixtures::k4_apex_inside();
  TriangularCactus c = cactus_of(g, {{0, 1, 2}});
  AnalysisReport rep = analyze(g, c);
  const ComponentReport& cr = rep.components[0];
  CHECK(cr.outer_is_cactus_face);
  CHECK(cr.q == 4);
  CHECK(cr.phi == 3);
  CHECK(cr.verdict("outer_gain")->status == VerdictStatus::not_applicable);
  // Recorded only: the outer face is the triangle itself.
  const Verdict* phi = cr.verdict("phi_bound");
  CHECK(phi->kind == VerdictKind::report);
  CHECK(phi->failed());
  CHECK_FALSE(rep.any_failed(VerdictKind::bound));

  // Re-rooting to a cross triangle restores the bound.
  PlaneGraph rerooted = g.with_outer(*g.find_dart(0, 1));
  TriangularCactus c2 = cactus_of(rerooted, {{0, 1, 2}});
  AnalysisReport rep2 = analyze(rerooted, c2);
  CHECK_FALSE(rep2.components[0].outer_is_cactus_face);
  CHECK(rep2.components[0].verdict("phi_bound")->status == VerdictStatus::pass);
}

TEST_CASE("bowtie with a bridging type-2 edge is all-heavy and tight on its inner face") {
  PlaneGraph g = bowtie_with_bridge();
  TriangularCactus c = cactus_of(g, {{0, 1, 2}, {2, 3, 4}});
  AnalysisReport rep = analyze(g, c);
  REQUIRE(rep.verified_optimal);
  REQUIRE(rep.components.size() == 1);
  const ComponentReport& cr = rep.components[0];
  CHECK(cr.p == 2);
  CHECK(cr.q == 6);
  CHECK(cr.p_type == std::array<int, 4>{0, 2, 0, 0});
  CHECK(cr.a_type == std::array<int, 3>{0, 0, 1});
  CHECK(cr.survive_sum == 0);
  CHECK(cr.all_heavy);
  CHECK(cr.superface_count == 2);
  CHECK(cr.phi == 4);

  const EdgeClass* bridge = cr.edges.find(*g.find_edge(1, 3));
  REQUIRE(bridge != nullptr);
  CHECK(bridge->kind == EdgeKind::type2);
  std::set<Vertex> landings;
  for (int side : bridge->cross_on_side) landings.insert(cr.edges.crosses[side].landing_vertex);
  CHECK(landings == std::set<Vertex>{5, 6});

  for (const TriangleClass& t : cr.triangles) {
    CHECK(t.heavy);
    CHECK(t.type == 1);
  }
  CHECK(cr.triangles[0].free_vertex == 0);
  CHECK(cr.triangles[1].free_vertex == 4);

  const SuperFaceRecord& outer = outer_face(cr);
  CHECK(outer.free == 4);
  CHECK(outer.occ == 1);
  CHECK(outer.mu == Half::from_halves(9));
  CHECK(outer.gain == Half::from_halves(9));
  CHECK(outer.gain >= Half::whole(cr.phi - 1));

  auto inner = std::find_if(cr.superfaces.begin(), cr.superfaces.end(),
                            [](const SuperFaceRecord& f) { return !f.is_outer; });
  REQUIRE(inner != cr.superfaces.end());
  CHECK(inner->occ == 3);
  CHECK(inner->free == 0);
  CHECK(inner->survive == 0);
  CHECK(inner->gain == Half::from_halves(3));
  CHECK(inner->label == std::array<int, 3>{3, 0, 0});
  REQUIRE(inner->gain_bound.has_value());
  CHECK(*inner->gain_bound == Half::from_halves(3));

  CHECK(cr.mu_sum == Half::whole(6));
  for (const char* name : {"superface_bound", "mu_sum_heavy", "gain_table", "outer_gain", "phi_bound"}) {
    CAPTURE(name);
    CHECK(cr.verdict(name)->status == VerdictStatus::pass);
  }
  CHECK(cr.verdict("phi_bound")->kind == VerdictKind::conditional);
  check_against_brute_force(g, c, rep);
}

TEST_CASE("constructed fences reach the conditional verdicts") {
  // Seeds picked so that the built cactus is a verified optimum and all-heavy.
  for (auto [m, seed] : std::vector<std::pair<int, int>>{{4, 13}, {4, 19}, {3, 42}, {5, 80}, {3, 114}, {5, 122}}) {
    CAPTURE(seed);
    auto inst = fixtures::heavy_fence(m, seed);
    TriangularCactus c = TriangularCactus::from_vertex_triples(inst.graph, inst.cactus);
    AnalysisReport rep = analyze(inst.graph, c);
    REQUIRE(rep.verified_optimal);
    const ComponentReport& cr = rep.components[0];
    REQUIRE(cr.all_heavy);
    for (const Verdict& v : cr.verdicts) {
      CAPTURE(v.name);
      CHECK_FALSE(v.failed());
      if (v.kind == VerdictKind::conditional && v.name != "outer_gain") CHECK(v.status == VerdictStatus::pass);
    }
    check_against_brute_force(inst.graph, c, rep);
  }
}

TEST_CASE("friend pairs under a lid") {
  auto inst = fixtures::heavy_fence(3, 0, true);
  TriangularCactus c = TriangularCactus::from_vertex_triples(inst.graph, inst.cactus);
  AnalyzerOptions options;
  options.strict_structure = false;
  AnalysisReport rep = analyze(inst.graph, c, options);
  CHECK_FALSE(rep.verified_optimal);
  const ComponentReport& cr = rep.components[0];
  REQUIRE(cr.all_heavy);
  auto lidded = std::find_if(cr.superfaces.begin(), cr.superfaces.end(),
                             [](const SuperFaceRecord& f) { return !f.is_outer && !f.friends.empty(); });
  REQUIRE(lidded != cr.superfaces.end());
  CHECK(lidded->label == std::array<int, 3>{1, 1, 0});
  CHECK(lidded->friendly);
  CHECK(lidded->bound_class == "[1,1,0] friendly");
  CHECK(*lidded->gain_bound == Half::whole(2));
  // Friends have adjacent free corners in G.
  for (auto [a, b] : lidded->friends) {
    Vertex fa = cr.triangles[0].free_vertex, fb = fa;
    for (const TriangleClass& t : cr.triangles) {
      if (t.id == a) fa = t.free_vertex;
      if (t.id == b) fb = t.free_vertex;
    }
    CHECK(inst.graph.adjacent(fa, fb));
  }
  // Without the strict switch off, the failing structure check is an error.
  try {
    analyze(inst.graph, c);
    FAIL("expected NotLocallyOptimalInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_locally_optimal_input);
  }
}

TEST_CASE("inputs that are not a component are rejected") {
  PlaneGraph g = bowtie_with_bridge();
  TriangularCactus c = cactus_of(g, {{0, 1, 2}, {2, 3, 4}});
  std::vector<Vertex> partial{0, 1, 2};
  try {
    classify_edges(g, c, partial);
    FAIL("expected NotAComponent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_component);
  }
  std::vector<Vertex> whole{0, 1, 2, 3, 4};
  CHECK_NOTHROW(classify_edges(g, c, whole));
}

TEST_CASE("two-swap optima on random triangulations satisfy every asserted verdict") {
  for (int seed = 0; seed < 25; ++seed) {
    CAPTURE(seed);
    PlaneGraph g = random_maximal_planar(5 + seed % 20, seed, 3 * seed);
    SearchConfig cfg;
    cfg.seed = seed;
    auto [c, trace] = local_search(g, cfg);
    AnalysisReport rep = analyze(g, c);
    REQUIRE(rep.verified_optimal);
    CHECK(rep.q_sum == triangular_faces(g).all);
    CHECK(rep.f3_all == triangular_faces(g).all);
    CHECK_FALSE(rep.any_failed(VerdictKind::identity));
    CHECK_FALSE(rep.any_failed(VerdictKind::bound));
    CHECK_FALSE(rep.any_failed(VerdictKind::conditional));
    CHECK_FALSE(rep.any_failed(VerdictKind::structural));
    for (const ComponentReport& cr : rep.components) CHECK(cr.q <= 6 * cr.p);
    check_against_brute_force(g, c, rep);
  }
}

TEST_CASE("identities hold on greedy cacti that are not optimal") {
  AnalyzerOptions options;
  options.strict_structure = false;
  for (int seed = 0; seed < 20; ++seed) {
    CAPTURE(seed);
    PlaneGraph g = random_maximal_planar(10 + seed, seed, seed);
    TriangularCactus c = greedy_initial(g, seed);
    AnalysisReport rep = analyze(g, c, options);
    CHECK_FALSE(rep.any_failed(VerdictKind::identity));
    check_against_brute_force(g, c, rep);
  }
}
