#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace glj::detail {

// Union-find whose roots are always the smallest member.
struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  // Class index per element, numbered by smallest member.
  std::vector<std::uint32_t> labels(std::uint32_t* count = nullptr) {
    std::vector<std::uint32_t> label(parent.size()), root(parent.size(), UINT32_MAX);
    std::uint32_t next = 0;
    for (std::uint32_t x = 0; x < parent.size(); ++x) {
      auto& r = root[find(x)];
      if (r == UINT32_MAX) r = next++;
      label[x] = r;
    }
    if (count) *count = next;
    return label;
  }
};

}  // namespace glj::detail
