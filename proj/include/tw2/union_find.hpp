#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace tw2 {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // halving
      x = parent_[x];
    }
    return x;
  }

  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) rank_[x]++;
    return true;
  }

  bool same(int x, int y) { return find(x) == find(y); }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

}  // namespace tw2
