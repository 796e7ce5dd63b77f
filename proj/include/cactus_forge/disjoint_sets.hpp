#pragma once

#include <numeric>
#include <vector>

namespace cactus_forge {

class DisjointSets {
 public:
  DisjointSets() = default;
  explicit DisjointSets(int size) : parent_(size), rank_(size, 0), sets_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) const {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --sets_;
    return true;
  }

  bool same(int a, int b) const { return find(a) == find(b); }
  int size() const { return static_cast<int>(parent_.size()); }
  int set_count() const { return sets_; }

 private:
  mutable std::vector<int> parent_;
  std::vector<int> rank_;
  int sets_ = 0;
};

}  // namespace cactus_forge
