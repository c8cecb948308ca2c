// Copyright 2026 The netcon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETCON_UNION_FIND_H_
#define NETCON_UNION_FIND_H_

#include <numeric>
#include <utility>
#include <vector>

namespace netcon {

// Disjoint sets with union by size and path compression.
class UnionFind {
 public:
  explicit UnionFind(int n = 0) { Reset(n); }

  void Reset(int n) {
    parent_.resize(static_cast<size_t>(n));
    std::iota(parent_.begin(), parent_.end(), 0);
    size_.assign(static_cast<size_t>(n), 1);
  }

  int Find(int x) {
    int root = x;
    while (parent_[static_cast<size_t>(root)] != root) {
      root = parent_[static_cast<size_t>(root)];
    }
    while (parent_[static_cast<size_t>(x)] != root) {
      x = std::exchange(parent_[static_cast<size_t>(x)], root);
    }
    return root;
  }

  bool Connected(int a, int b) { return Find(a) == Find(b); }

  // Returns false if a and b were already in the same set.
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (size_[static_cast<size_t>(a)] < size_[static_cast<size_t>(b)]) {
      std::swap(a, b);
    }
    parent_[static_cast<size_t>(b)] = a;
    size_[static_cast<size_t>(a)] += size_[static_cast<size_t>(b)];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace netcon

#endif  // NETCON_UNION_FIND_H_
