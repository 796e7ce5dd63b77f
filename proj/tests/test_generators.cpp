#include <algorithm>
#include <set>

#include "cactus_forge/error.hpp"
#include "cactus_forge/generators.hpp"
#include "doctest.h"

using namespace cactus_forge;

namespace {

bool all_faces_triangular(const PlaneGraph& g) {
  return std::all_of(g.faces().begin(), g.faces().end(), [](const Face& f) { return f.is_triangle; });
}

std::set<Vertex> outer_vertices(const PlaneGraph& g) {
  auto vs = g.face_vertices(g.dart(*g.outer_dart()).face);
  return {vs.begin(), vs.end()};
}

}  // namespace

TEST_CASE("small stacked triangulations") {
  PlaneGraph tri = random_maximal_planar(3, 0);
  CHECK(tri.edge_count() == 3);
  CHECK(tri.face_count() == 2);
  PlaneGraph k4 = random_maximal_planar(4, 0);
  CHECK(k4.edge_count() == 6);
  CHECK(all_faces_triangular(k4));
  PlaneGraph ten = random_maximal_planar(10, 1);
  CHECK(missing_edges(ten) == 0);
  CHECK(triangular_faces(ten).all == 16);
  CHECK_THROWS_AS(random_maximal_planar(2, 0), Error);
}

TEST_CASE("random triangulations are simple triangulations with outer face 0,1,2") {
  for (int seed = 0; seed < 40; ++seed) {
    const int n = 4 + seed * 3 % 61;
    PlaneGraph g = random_maximal_planar(n, seed, seed * 5);
    CHECK(g.edge_count() == 3 * n - 6);
    CHECK(all_faces_triangular(g));
    CHECK(triangular_faces(g).internal == 2 * n - 5);
    CHECK(outer_vertices(g) == std::set<Vertex>{0, 1, 2});
  }
}

TEST_CASE("generators are deterministic and flips diversify") {
  PlaneGraph a = random_maximal_planar(30, 7, 50);
  PlaneGraph b = random_maximal_planar(30, 7, 50);
  CHECK(a.rotations() == b.rotations());
  PlaneGraph stacked = random_maximal_planar(30, 7, 0);
  CHECK(stacked.rotations() != a.rotations());
  PlaneGraph other = random_maximal_planar(30, 8, 50);
  CHECK(other.rotations() != a.rotations());
}

TEST_CASE("platonic solids") {
  PlaneGraph tetra = platonic("tetrahedron");
  CHECK(tetra.vertex_count() == 4);
  CHECK(triangular_faces(tetra).all == 4);
  PlaneGraph octa = platonic("octahedron");
  CHECK(octa.vertex_count() == 6);
  CHECK(octa.edge_count() == 12);
  CHECK(triangular_faces(octa).all == 8);
  for (Vertex v = 0; v < 6; ++v) CHECK(octa.degree(v) == 4);
  PlaneGraph ico = platonic("icosahedron");
  CHECK(ico.vertex_count() == 12);
  CHECK(ico.edge_count() == 30);
  CHECK(triangular_faces(ico).all == 20);
  CHECK(triangular_faces(ico).internal == 19);
  for (Vertex v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);
  try {
    platonic("dodecahedron");
    FAIL("expected UnknownName");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_name);
  }
}

TEST_CASE("wheels, fans and grids") {
  PlaneGraph w = wheel(6);
  CHECK(triangular_faces(w).internal == 5);
  CHECK(w.face(w.dart(*w.outer_dart()).face).length() == 5);
  PlaneGraph f = fan(6);
  CHECK(triangular_faces(f).internal == 4);
  CHECK(f.face(f.dart(*f.outer_dart()).face).length() == 6);
  PlaneGraph grid = grid_triangulation(3, 4);
  CHECK(grid.vertex_count() == 12);
  CHECK(triangular_faces(grid).internal == 2 * 2 * 3);
  CHECK(grid.edge_count() == 2 * 4 + 3 * 3 + 2 * 3);
  CHECK_THROWS_AS(wheel(3), Error);
  CHECK_THROWS_AS(fan(2), Error);
  CHECK_THROWS_AS(grid_triangulation(1, 5), Error);
}

TEST_CASE("generate dispatches on family") {
  GeneratorSpec spec;
  spec.family = "platonic";
  spec.name = "octahedron";
  CHECK(generate(spec).vertex_count() == 6);
  spec.family = "grid_triangulation";
  spec.n = 3;
  spec.height = 3;
  CHECK(generate(spec).vertex_count() == 9);
  spec.family = "nope";
  CHECK_THROWS_AS(generate(spec), Error);
}
