#pragma once

#include "glj/combinat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261015);
  return gen;
}

inline std::size_t uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

inline glj::Injection random_injection(std::size_t m, std::size_t n) {
  std::vector<unsigned> pool(n);
  std::iota(pool.begin(), pool.end(), 1u);
  std::shuffle(pool.begin(), pool.end(), rng());
  pool.resize(m);
  return glj::Injection(n, pool);
}

}  // namespace test

#include "glj/catcore.hpp"

#include <map>

namespace test {

// One-object category of the permutation group generated by gens (each a
// permutation of 0..k-1). Element 0 is the identity.
inline glj::PresentedCategory group_category(const std::vector<std::vector<int>>& gens) {
  using Perm = std::vector<int>;
  const std::size_t k = gens.front().size();
  Perm id(k);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elems{id};
  std::map<Perm, std::uint32_t> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      Perm p(k);
      for (std::size_t t = 0; t < k; ++t) p[t] = g[elems[i][t]];
      if (index.emplace(p, elems.size()).second) elems.push_back(p);
    }
  glj::PresentedCategory::Builder b;
  b.add_object("*");
  for (std::size_t i = 0; i < elems.size(); ++i) b.add_morphism(0, 0);
  b.set_identity(0, 0);
  for (std::size_t f = 0; f < elems.size(); ++f)
    for (std::size_t g = 0; g < elems.size(); ++g) {
      Perm p(k);
      for (std::size_t t = 0; t < k; ++t) p[t] = elems[g][elems[f][t]];
      b.add_composite(glj::MorId(g), glj::MorId(f), index.at(p));
    }
  return std::move(b).build();
}

inline glj::PresentedCategory cyclic_group(int n) {
  std::vector<int> g(n);
  for (int i = 0; i < n; ++i) g[i] = (i + 1) % n;
  return group_category({g});
}

// Total order 0 < 1 < ... < n-1 as a category; morphism i -> j exists for i <= j.
inline glj::PresentedCategory linear_order(int n) {
  glj::PresentedCategory::Builder b;
  for (int i = 0; i < n; ++i) b.add_object();
  std::map<std::pair<int, int>, glj::MorId> id;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) id[{i, j}] = b.add_morphism(glj::ObjId(i), glj::ObjId(j));
  for (int i = 0; i < n; ++i) b.set_identity(glj::ObjId(i), id[{i, i}]);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) b.add_composite(id[{j, k}], id[{i, j}], id[{i, k}]);
  return std::move(b).build();
}

}  // namespace test
