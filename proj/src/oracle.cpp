#include "cactus_forge/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cactus_forge/disjoint_sets.hpp"
#include "cactus_forge/error.hpp"

namespace cactus_forge {

namespace {

using Triple = std::array<Vertex, 3>;

class BranchAndBound {
 public:
  BranchAndBound(int n, std::vector<Triple> triples, std::int64_t budget)
      : n_(n), triples_(std::move(triples)), budget_(budget) {}

  OracleResult run() {
    DisjointSets dsu(n_);
    std::vector<int> chosen;
    search(0, dsu, chosen);
    OracleResult r;
    r.optimum = static_cast<int>(best_.size());
    for (int i : best_) r.witness.push_back(triples_[i]);
    std::sort(r.witness.begin(), r.witness.end());
    r.nodes_explored = nodes_;
    r.exhausted = !aborted_;
    return r;
  }

 private:
  bool addable(const DisjointSets& dsu, int i) const {
    const Triple& t = triples_[i];
    const int a = dsu.find(t[0]), b = dsu.find(t[1]), c = dsu.find(t[2]);
    return a != b && b != c && a != c;
  }

  void search(std::size_t from, const DisjointSets& dsu, std::vector<int>& chosen) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (chosen.size() > best_.size()) best_ = chosen;

    int remaining = 0;
    std::size_t next = triples_.size();
    for (std::size_t j = from; j < triples_.size(); ++j) {
      if (!addable(dsu, static_cast<int>(j))) continue;
      if (next == triples_.size()) next = j;
      ++remaining;
    }
    const int rank_room = (dsu.set_count() - 1) / 2;
    const int bound = static_cast<int>(chosen.size()) + std::min(remaining, rank_room);
    if (bound <= static_cast<int>(best_.size()) || next == triples_.size()) return;

    DisjointSets with = dsu;
    with.unite(triples_[next][0], triples_[next][1]);
    with.unite(triples_[next][1], triples_[next][2]);
    chosen.push_back(static_cast<int>(next));
    search(next + 1, with, chosen);
    chosen.pop_back();
    search(next + 1, dsu, chosen);
  }

  int n_;
  std::vector<Triple> triples_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<int> best_;
};

OracleResult solve(int n, std::vector<Triple> triples, const std::vector<int>& degree,
                   std::int64_t budget, bool allow_large) {
  if (!allow_large && static_cast<int>(triples.size()) > kOracleCandidateGuard) {
    throw Error(ErrorCode::too_many_candidates,
                std::to_string(triples.size()) + " candidates exceed the guard of " +
                    std::to_string(kOracleCandidateGuard));
  }
  auto weight = [&](const Triple& t) { return degree[t[0]] + degree[t[1]] + degree[t[2]]; };
  std::stable_sort(triples.begin(), triples.end(), [&](const Triple& a, const Triple& b) {
    if (weight(a) != weight(b)) return weight(a) > weight(b);
    return a < b;
  });
  return BranchAndBound(n, std::move(triples), budget).run();
}

}  // namespace

SimpleGraph complete_graph(int n) {
  SimpleGraph g;
  g.n = n;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  }
  return g;
}

OracleResult exact_beta_faces(const PlaneGraph& g, std::int64_t node_budget, bool allow_large) {
  std::vector<Triple> triples;
  for (const Triangle& t : g.candidates()) triples.push_back(t.vertices);
  std::vector<int> degree(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) degree[v] = g.degree(v);
  return solve(g.vertex_count(), std::move(triples), degree, node_budget, allow_large);
}

OracleResult exact_beta_all_triangles(const SimpleGraph& g, std::int64_t node_budget,
                                      bool allow_large) {
  std::vector<std::set<Vertex>> adj(g.n);
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) {
      throw Error(ErrorCode::malformed_input, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorCode::loop_edge, "at vertex " + std::to_string(u));
    if (!adj[u].insert(v).second) {
      throw Error(ErrorCode::parallel_edge, std::to_string(u) + "-" + std::to_string(v));
    }
    adj[v].insert(u);
  }
  std::vector<Triple> triples;
  for (Vertex u = 0; u < g.n; ++u) {
    for (Vertex v : adj[u]) {
      if (v <= u) continue;
      for (Vertex w : adj[v]) {
        if (w > v && adj[u].count(w)) triples.push_back({u, v, w});
      }
    }
  }
  std::vector<int> degree(g.n);
  for (Vertex v = 0; v < g.n; ++v) degree[v] = static_cast<int>(adj[v].size());
  return solve(g.n, std::move(triples), degree, node_budget, allow_large);
}

OracleResult exact_beta_all_triangles(const PlaneGraph& g, std::int64_t node_budget,
                                      bool allow_large) {
  SimpleGraph simple;
  simple.n = g.vertex_count();
  for (EdgeId e = 0; e < g.edge_count(); ++e) simple.edges.push_back(g.edge_endpoints(e));
  return exact_beta_all_triangles(simple, node_budget, allow_large);
}

}  // namespace cactus_forge
