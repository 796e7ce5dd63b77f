#include <algorithm>

#include "cactus_forge/error.hpp"
#include "cactus_forge/generators.hpp"
#include "cactus_forge/local_search.hpp"
#include "cactus_forge/oracle.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cactus_forge;
using fixtures::candidate;

TEST_CASE("greedy start is maximal") {
  CHECK(greedy_initial(fixtures::triangle(), 1).size() == 1);
  PlaneGraph k4 = platonic("tetrahedron");
  CHECK(greedy_initial(k4, 1).size() == 1);
  PlaneGraph two = fixtures::two_triangles_and_point();
  CHECK(greedy_initial(two, 5).size() == 2);
  for (int seed = 0; seed < 10; ++seed) {
    PlaneGraph g = random_maximal_planar(30, seed, 30);
    TriangularCactus c = greedy_initial(g, seed);
    CHECK_FALSE(find_improving_swap(g, c, 0).has_value());
    CHECK(verify_local_optimality(g, c, 0).optimal);
  }
}

TEST_CASE("augmenting move on a free triangle") {
  PlaneGraph chain = fixtures::triangle_chain(2);
  TriangularCactus c(chain);
  c.try_add(candidate(chain, {0, 1, 2}));
  auto move = find_improving_swap(chain, c, 2);
  REQUIRE(move.has_value());
  CHECK(move->remove.empty());
  CHECK(move->add == std::vector<TriangleId>{candidate(chain, {2, 3, 4})});
}

TEST_CASE("K4 with one face admits no improving swap") {
  PlaneGraph k4 = platonic("tetrahedron");
  for (const Triangle& t : k4.candidates()) {
    TriangularCactus c(k4);
    c.try_add(t.id);
    CHECK_FALSE(find_improving_swap(k4, c, 2).has_value());
    CHECK(verify_local_optimality(k4, c, 2).optimal);
  }
}

TEST_CASE("octahedron with one triangle improves to the optimum") {
  PlaneGraph octa = platonic("octahedron");
  TriangularCactus c(octa);
  c.try_add(0);
  auto move = find_improving_swap(octa, c, 2);
  REQUIRE(move.has_value());
  TriangularCactus next = apply_move(c, *move);
  CHECK(next.size() == 2);
  CHECK(next.size() == exact_beta_faces(octa).optimum);
}

TEST_CASE("local search examples") {
  auto [tri, tri_trace] = local_search(fixtures::triangle(), {});
  CHECK(tri.size() == 1);

  PlaneGraph octa = platonic("octahedron");
  auto [oc, oc_trace] = local_search(octa, {});
  CHECK(oc.size() == 2);
  CHECK(triangular_faces(octa).internal == 7);

  PlaneGraph ico = platonic("icosahedron");
  REQUIRE(triangular_faces(ico).internal == 19);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    SearchConfig cfg;
    cfg.seed = seed;
    auto [c, trace] = local_search(ico, cfg);
    CHECK(c.size() >= 4);
    CHECK(c.size() <= exact_beta_faces(ico).optimum);
    CHECK(trace.final_delta == trace.initial_delta + static_cast<int>(trace.moves.size()));
  }
}

TEST_CASE("empty cactus on a triangle is not optimal") {
  PlaneGraph tri = fixtures::triangle();
  TriangularCactus empty(tri);
  OptimalityCheck check = verify_local_optimality(tri, empty, 2);
  CHECK_FALSE(check.optimal);
  REQUIRE(check.witness.has_value());
  CHECK(check.witness->remove.empty());
  CHECK(check.witness->add == std::vector<TriangleId>{0});
}

TEST_CASE("pruned search agrees with the exhaustive verifier") {
  int improvable = 0;
  for (int seed = 0; seed < 80; ++seed) {
    PlaneGraph g = random_maximal_planar(6 + seed % 20, seed, seed % 7 * 3);
    TriangularCactus c = greedy_initial(g, seed * 31 + 1);
    for (int t = 1; t <= 2; ++t) {
      auto move = find_improving_swap(g, c, t);
      OptimalityCheck check = verify_local_optimality(g, c, t);
      CHECK(move.has_value() == !check.optimal);
      if (move) {
        ++improvable;
        CHECK(*move == *check.witness);
        TriangularCactus next = apply_move(c, *move);
        auto ids = next.triangles();
        CHECK(is_valid_cactus(g, ids));
        CHECK(next.size() == c.size() + 1);
        CHECK(move->add.size() == move->remove.size() + 1);
      }
    }
  }
  CHECK(improvable > 0);
}

TEST_CASE("search output is verified optimal and traces are consistent") {
  for (int seed = 0; seed < 30; ++seed) {
    PlaneGraph g = random_maximal_planar(8 + seed, seed, seed);
    for (int t = 1; t <= 2; ++t) {
      SearchConfig cfg;
      cfg.swap_size = t;
      cfg.seed = seed;
      auto [c, trace] = local_search(g, cfg);
      CHECK(verify_local_optimality(g, c, t).optimal);
      CHECK(trace.final_delta == c.size());
      CHECK(trace.final_delta == trace.initial_delta + static_cast<int>(trace.moves.size()));
      if (t == 2) CHECK(6 * c.size() >= triangular_faces(g).internal);
    }
  }
}

TEST_CASE("best-improvement applies the same moves with a full scan") {
  PlaneGraph g = random_maximal_planar(30, 8, 20);
  SearchConfig first;
  first.seed = 3;
  SearchConfig best = first;
  best.pivot = Pivot::best_improvement;
  auto [c1, t1] = local_search(g, first);
  auto [c2, t2] = local_search(g, best);
  CHECK(t1.moves == t2.moves);
  CHECK(t2.moves_examined >= t1.moves_examined);
}

TEST_CASE("search is deterministic per seed") {
  PlaneGraph g = random_maximal_planar(40, 1, 40);
  SearchConfig cfg;
  cfg.seed = 12;
  auto [a, ta] = local_search(g, cfg);
  auto [b, tb] = local_search(g, cfg);
  CHECK(a.triangles() == b.triangles());
  CHECK(ta.moves == tb.moves);
  CHECK(ta.moves_examined == tb.moves_examined);
}

TEST_CASE("iteration cap is surfaced") {
  PlaneGraph two = fixtures::two_triangles_and_point();
  SearchConfig cfg;
  cfg.iteration_cap = 1;
  try {
    local_search_from(two, TriangularCactus(two), cfg);
    FAIL("expected IterationCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::iteration_cap_exceeded);
  }
  cfg.iteration_cap = 2;
  auto [c, trace] = local_search_from(two, TriangularCactus(two), cfg);
  CHECK(c.size() == 2);
  CHECK(trace.moves.size() == 2);

  SearchConfig bad;
  bad.swap_size = 3;
  CHECK_THROWS_AS(local_search(two, bad), Error);
}

TEST_CASE("greedy can be 1-swap improvable, and the witness is a real improvement") {
  int found = 0;
  for (int seed = 0; seed < 200 && found < 5; ++seed) {
    PlaneGraph g = random_maximal_planar(10 + seed % 15, seed, 5);
    TriangularCactus c = greedy_initial(g, seed);
    OptimalityCheck check = verify_local_optimality(g, c, 1);
    if (check.optimal) continue;
    ++found;
    CHECK(check.witness->remove.size() == 1);
    TriangularCactus next = apply_move(c, *check.witness);
    CHECK(next.size() == c.size() + 1);
  }
  CHECK(found > 0);
}
