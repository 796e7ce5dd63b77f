#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "cactus_forge/plane_graph.hpp"

namespace cactus_forge {

inline constexpr int kOracleCandidateGuard = 40;
inline constexpr std::int64_t kDefaultNodeBudget = 10'000'000;

struct OracleResult {
  int optimum = 0;
  std::vector<std::array<Vertex, 3>> witness;  // sorted triples
  std::int64_t nodes_explored = 0;
  bool exhausted = false;  // false: budget ran out, optimum is only a lower bound
};

// Plain undirected graph for the unrestricted variant (need not be planar).
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

SimpleGraph complete_graph(int n);

// Maximum cactus over triangular faces. Throws TooManyCandidates above the
// guard unless allow_large is set.
OracleResult exact_beta_faces(const PlaneGraph& g, std::int64_t node_budget = kDefaultNodeBudget,
                              bool allow_large = false);

// Maximum cactus over all 3-cliques.
OracleResult exact_beta_all_triangles(const SimpleGraph& g,
                                      std::int64_t node_budget = kDefaultNodeBudget,
                                      bool allow_large = false);
OracleResult exact_beta_all_triangles(const PlaneGraph& g,
                                      std::int64_t node_budget = kDefaultNodeBudget,
                                      bool allow_large = false);

}  // namespace cactus_forge
