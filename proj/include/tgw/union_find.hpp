#pragma once

#include <numeric>
#include <vector>

namespace tgw {

// Disjoint sets with path halving. The smaller index always becomes the
// root, so representatives are the minimal element of each class.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true when two distinct classes were merged.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }

  // Class ids numbered 0.. in order of first occurrence.
  std::vector<int> canonical_classes() {
    std::vector<int> id(parent_.size(), -1), out(parent_.size());
    int next = 0;
    for (int x = 0; x < size(); ++x) {
      const int r = find(x);
      if (id[r] < 0) id[r] = next++;
      out[x] = id[r];
    }
    return out;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace tgw
