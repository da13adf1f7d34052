#pragma once

#include <numeric>
#include <vector>

namespace pbracket::detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }

  // The smaller root wins, so roots are the least element of their class.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) {
      parent_[b] = a;
    } else {
      parent_[a] = b;
    }
  }

  int classes() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) n += find(i) == i;
    return n;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace pbracket::detail
