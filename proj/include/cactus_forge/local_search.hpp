#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cactus_forge/cactus.hpp"
#include "cactus_forge/plane_graph.hpp"

namespace cactus_forge {

struct SwapMove {
  std::vector<TriangleId> remove;  // ascending, size <= swap size
  std::vector<TriangleId> add;     // ascending, size == remove.size() + 1

  friend bool operator==(const SwapMove&, const SwapMove&) = default;
};

enum class Pivot { first_improvement, best_improvement };

struct SearchConfig {
  int swap_size = 2;  // 1 or 2
  std::uint64_t seed = 0;
  Pivot pivot = Pivot::first_improvement;
  std::optional<int> iteration_cap;  // default floor((n-1)/2), at least 1
};

struct SearchTrace {
  int initial_delta = 0;
  int final_delta = 0;
  std::vector<SwapMove> moves;
  std::int64_t moves_examined = 0;
  double wall_time_ms = 0.0;
};

// Maximal cactus from a seed-shuffled pass over the candidates.
TriangularCactus greedy_initial(const PlaneGraph& g, std::uint64_t seed);

// Pruned search: every added triangle must touch a component that the removal
// of X split or shrank. Complete for maximal cacti. Moves are visited in
// lexicographic order of (|X|, X ids, Y ids).
std::optional<SwapMove> find_improving_swap(const PlaneGraph& g, const TriangularCactus& c,
                                            int swap_size, std::int64_t* examined = nullptr,
                                            Pivot pivot = Pivot::first_improvement);

TriangularCactus apply_move(const TriangularCactus& c, const SwapMove& move);

std::pair<TriangularCactus, SearchTrace> local_search(const PlaneGraph& g,
                                                      const SearchConfig& cfg);
// Same search from a given starting cactus.
std::pair<TriangularCactus, SearchTrace> local_search_from(const PlaneGraph& g,
                                                           TriangularCactus start,
                                                           const SearchConfig& cfg);

struct OptimalityCheck {
  bool optimal = true;
  std::optional<SwapMove> witness;
};

// Exhaustive over |X| <= swap_size and all candidate add-sets of size |X|+1,
// judged by is_valid_cactus. Shares no code with find_improving_swap.
OptimalityCheck verify_local_optimality(const PlaneGraph& g, const TriangularCactus& c,
                                        int swap_size);

}  // namespace cactus_forge
