#pragma once

#include <map>
#include <numeric>
#include <vector>

namespace medial::detail {

/// Union-find over arbitrary integer keys.
class UnionFind {
 public:
  void add(int x) { parent_.try_emplace(x, x); }

  int find(int x) {
    add(x);
    int root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      int next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  /// Returns false when x and y were already joined. The smaller root wins.
  bool unite(int x, int y) {
    int a = find(x), b = find(y);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::map<int, int> parent_;
};

}  // namespace medial::detail
