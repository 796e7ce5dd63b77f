#include "cactus_forge/local_search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "cactus_forge/error.hpp"
#include "cactus_forge/rng.hpp"

namespace cactus_forge {

TriangularCactus greedy_initial(const PlaneGraph& g, std::uint64_t seed) {
  std::vector<TriangleId> order(g.candidates().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<TriangleId>(i);
  Rng rng(seed);
  rng.shuffle(order);
  TriangularCactus c(g);
  for (TriangleId t : order) c.try_add(t);
  return c;
}

namespace {

bool corners_distinct(const DisjointSets& dsu, const Triangle& t) {
  const int a = dsu.find(t.vertices[0]), b = dsu.find(t.vertices[1]), c = dsu.find(t.vertices[2]);
  return a != b && b != c && a != c;
}

// Enumerates add-sets of a fixed size for one removal set X.
class AddSetSearch {
 public:
  AddSetSearch(const PlaneGraph& g, std::vector<TriangleId> pool, const DisjointSets& base,
               int want, bool collect_all, std::int64_t& examined)
      : g_(g), pool_(std::move(pool)), want_(want), collect_all_(collect_all),
        examined_(examined) {
    chosen_.reserve(want);
    run(0, base);
  }

  const std::vector<std::vector<TriangleId>>& found() const { return found_; }

 private:
  bool run(std::size_t from, const DisjointSets& dsu) {
    if (static_cast<int>(chosen_.size()) == want_) {
      found_.push_back(chosen_);
      return !collect_all_;
    }
    for (std::size_t i = from; i < pool_.size(); ++i) {
      ++examined_;
      const Triangle& t = g_.candidates()[pool_[i]];
      if (!corners_distinct(dsu, t)) continue;
      DisjointSets next = dsu;
      next.unite(t.vertices[0], t.vertices[1]);
      next.unite(t.vertices[1], t.vertices[2]);
      chosen_.push_back(pool_[i]);
      const bool stop = run(i + 1, next);
      chosen_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const PlaneGraph& g_;
  std::vector<TriangleId> pool_;
  int want_;
  bool collect_all_;
  std::int64_t& examined_;
  std::vector<TriangleId> chosen_;
  std::vector<std::vector<TriangleId>> found_;
};

DisjointSets cactus_without(const PlaneGraph& g, const std::vector<TriangleId>& kept) {
  DisjointSets dsu(g.vertex_count());
  for (TriangleId t : kept) {
    const auto& v = g.candidates()[t].vertices;
    dsu.unite(v[0], v[1]);
    dsu.unite(v[1], v[2]);
  }
  return dsu;
}

// Calls visit(X) for every size-k subset of items in lexicographic order;
// stops when visit returns true.
template <typename Visit>
bool for_each_subset(const std::vector<TriangleId>& items, int k, Visit&& visit) {
  std::vector<TriangleId> subset;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (static_cast<int>(subset.size()) == k) return visit(subset);
    for (std::size_t i = from; i < items.size(); ++i) {
      subset.push_back(items[i]);
      if (self(self, i + 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

std::optional<SwapMove> find_improving_swap(const PlaneGraph& g, const TriangularCactus& c,
                                            int swap_size, std::int64_t* examined,
                                            Pivot pivot) {
  if (swap_size < 0 || swap_size > 2) {
    throw Error(ErrorCode::invalid_config, "swap size must be 0, 1 or 2");
  }
  std::int64_t local_examined = 0;
  std::int64_t& count = examined ? *examined : local_examined;
  const bool full_scan = pivot == Pivot::best_improvement;
  const std::vector<TriangleId> members = c.triangles();
  std::optional<SwapMove> best;

  for (int k = 0; k <= swap_size && !(best && !full_scan); ++k) {
    if (k > static_cast<int>(members.size())) break;
    for_each_subset(members, k, [&](const std::vector<TriangleId>& removed) {
      std::vector<TriangleId> kept;
      std::set_difference(members.begin(), members.end(), removed.begin(), removed.end(),
                          std::back_inserter(kept));
      const DisjointSets dsu = cactus_without(g, kept);
      std::vector<bool> affected_root(g.vertex_count(), false);
      for (TriangleId x : removed) {
        for (Vertex v : g.candidates()[x].vertices) affected_root[dsu.find(v)] = true;
      }
      std::vector<TriangleId> pool;
      for (const Triangle& t : g.candidates()) {
        if (c.contains(t.id)) continue;
        if (!corners_distinct(dsu, t)) continue;
        if (k > 0) {
          bool touches = false;
          for (Vertex v : t.vertices) touches = touches || affected_root[dsu.find(v)];
          if (!touches) continue;
        }
        pool.push_back(t.id);
      }
      AddSetSearch search(g, std::move(pool), dsu, k + 1, false, count);
      if (search.found().empty()) return false;
      if (!best) best = SwapMove{removed, search.found().front()};
      return !full_scan;
    });
  }
  return best;
}

TriangularCactus apply_move(const TriangularCactus& c, const SwapMove& move) {
  TriangularCactus next = c;
  for (TriangleId x : move.remove) next.remove(x);
  for (TriangleId y : move.add) {
    if (!next.try_add(y)) {
      throw std::logic_error("swap move adds triangle " + std::to_string(y) +
                             " that closes a cycle");
    }
  }
  return next;
}

std::pair<TriangularCactus, SearchTrace> local_search_from(const PlaneGraph& g,
                                                           TriangularCactus start,
                                                           const SearchConfig& cfg) {
  if (cfg.swap_size < 1 || cfg.swap_size > 2) {
    throw Error(ErrorCode::invalid_config, "swap size must be 1 or 2");
  }
  const int cap = cfg.iteration_cap.value_or(std::max(1, (g.vertex_count() - 1) / 2));
  if (cap < 1) throw Error(ErrorCode::invalid_config, "iteration cap must be at least 1");

  const auto began = std::chrono::steady_clock::now();
  SearchTrace trace;
  trace.initial_delta = start.size();
  TriangularCactus current = std::move(start);
  while (auto move = find_improving_swap(g, current, cfg.swap_size, &trace.moves_examined,
                                         cfg.pivot)) {
    if (static_cast<int>(trace.moves.size()) >= cap) {
      throw Error(ErrorCode::iteration_cap_exceeded,
                  "improving move still available after " + std::to_string(cap) + " moves");
    }
    current = apply_move(current, *move);
    const auto ids = current.triangles();
    if (!is_valid_cactus(g, ids)) throw std::logic_error("search produced an invalid cactus");
    trace.moves.push_back(std::move(*move));
  }
  trace.final_delta = current.size();
  trace.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - began).count();
  return {std::move(current), std::move(trace)};
}

std::pair<TriangularCactus, SearchTrace> local_search(const PlaneGraph& g,
                                                      const SearchConfig& cfg) {
  return local_search_from(g, greedy_initial(g, cfg.seed), cfg);
}

namespace {

// Component labels of the union of the given triangles, by graph search.
std::vector<int> component_labels(const PlaneGraph& g, const std::vector<TriangleId>& tris) {
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> adj(n);
  for (TriangleId t : tris) {
    for (EdgeId e : g.candidates()[t].edges) {
      auto [u, v] = g.edge_endpoints(e);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  std::vector<int> label(n, -1);
  int next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    std::vector<Vertex> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adj[x]) {
        if (label[y] == -1) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

}  // namespace

OptimalityCheck verify_local_optimality(const PlaneGraph& g, const TriangularCactus& c,
                                        int swap_size) {
  const std::vector<TriangleId> members = c.triangles();
  OptimalityCheck result;
  for (int k = 0; k <= swap_size && k <= static_cast<int>(members.size()); ++k) {
    const bool found = for_each_subset(members, k, [&](const std::vector<TriangleId>& removed) {
      std::vector<TriangleId> kept;
      std::set_difference(members.begin(), members.end(), removed.begin(), removed.end(),
                          std::back_inserter(kept));
      const std::vector<int> label = component_labels(g, kept);
      // Validity is downward closed, so a triangle that is invalid on its own
      // cannot belong to any valid add-set.
      std::vector<TriangleId> pool;
      for (const Triangle& t : g.candidates()) {
        if (std::binary_search(kept.begin(), kept.end(), t.id)) continue;
        const int a = label[t.vertices[0]], b = label[t.vertices[1]], d = label[t.vertices[2]];
        if (a != b && b != d && a != d) pool.push_back(t.id);
      }
      return for_each_subset(pool, k + 1, [&](const std::vector<TriangleId>& added) {
        std::vector<TriangleId> candidate = kept;
        candidate.insert(candidate.end(), added.begin(), added.end());
        if (!is_valid_cactus(g, candidate)) return false;
        result.optimal = false;
        result.witness = SwapMove{removed, added};
        return true;
      });
    });
    if (found) break;
  }
  return result;
}

}  // namespace cactus_forge
