#include "glj/topo.hpp"

#include "detail/union_find.hpp"
#include "glj/errors.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

namespace glj {

namespace {

using detail::UnionFind;

std::size_t sparse_rank(const SparseMatrix& m, SparseSmithStats* stats, std::vector<Integer>* invariants) {
  if (m.rows() == 0 || m.cols() == 0) {
    if (invariants) invariants->clear();
    return 0;
  }
  auto inv = smith_invariants(m, stats);
  const std::size_t r = inv.size();
  if (invariants) *invariants = std::move(inv);
  return r;
}

}  // namespace

std::vector<std::uint32_t> components(const TruncatedSimplicialSet& x, std::size_t* count) {
  require_input(x.dim() >= 1, "components: dimension cap must be at least 1");
  UnionFind uf(x.count(0));
  for (std::uint32_t e = 0; e < x.count(1); ++e) uf.unite(x.face(1, e, 0).simplex, x.face(1, e, 1).simplex);
  std::vector<std::uint32_t> label(x.count(0)), root(x.count(0), UINT32_MAX);
  std::uint32_t next = 0;
  for (std::uint32_t v = 0; v < x.count(0); ++v) {
    auto& r = root[uf.find(v)];
    if (r == UINT32_MAX) r = next++;
    label[v] = r;
  }
  if (count) *count = next;
  return label;
}

ComponentRestriction restrict_to_component(const TruncatedSimplicialSet& x, std::uint32_t vertex) {
  require_input(vertex < x.count(0), "restrict_to_component: vertex out of range");
  const auto comp = components(x);
  const std::uint32_t target = comp[vertex];
  ComponentRestriction r;
  r.sset = TruncatedSimplicialSet(x.dim());
  r.old_ids.resize(x.dim() + 1);
  std::vector<std::vector<std::uint32_t>> new_id(x.dim() + 1);
  for (int n = 0; n <= x.dim(); ++n) {
    new_id[n].assign(x.count(n), UINT32_MAX);
    for (std::uint32_t s = 0; s < x.count(n); ++s) {
      const std::uint32_t v = n == 0 ? s : x.vertex(n, s, 0);
      if (comp[v] != target) continue;
      new_id[n][s] = static_cast<std::uint32_t>(r.old_ids[n].size());
      r.old_ids[n].push_back(s);
    }
    r.sset.set_count(n, r.old_ids[n].size());
  }
  for (int n = 1; n <= x.dim(); ++n)
    for (std::uint32_t s = 0; s < r.old_ids[n].size(); ++s)
      for (int i = 0; i <= n; ++i) {
        FaceRef f = x.face(n, r.old_ids[n][s], i);
        f.simplex = new_id[n - 1 - std::popcount(f.degeneracy)][f.simplex];
        require_internal(f.simplex != UINT32_MAX, "restrict_to_component: face leaves the component");
        r.sset.set_face(n, s, i, f);
      }
  if (!x.vertex_labels.empty())
    for (auto v : r.old_ids[0]) r.sset.vertex_labels.push_back(x.vertex_labels[v]);
  return r;
}

AbelianGroup homology(const TruncatedSimplicialSet& x, int n, Exec exec, HomologyStats* stats) {
  require_input(n >= 0, "homology: negative degree");
  if (n + 1 > x.dim())
    throw InputError("homology: H_" + std::to_string(n) + " needs simplices up to dimension " +
                     std::to_string(n + 1) + ", but the dimension cap is " + std::to_string(x.dim()));
  HomologyStats local;
  HomologyStats& st = stats ? *stats : local;
  st.boundary_rank_n = n == 0 ? 0 : sparse_rank(boundary_matrix(x, n, exec), nullptr, nullptr);
  std::vector<Integer> inv;
  st.boundary_rank_next = sparse_rank(boundary_matrix(x, n + 1, exec), &st.snf, &inv);
  AbelianGroup g;
  g.rank = x.count(n) - st.boundary_rank_n - st.boundary_rank_next;
  for (auto& d : inv)
    if (!d.is_unit()) g.torsion.push_back(d);
  return g;
}

nlohmann::json GroupPresentation::to_json() const {
  nlohmann::json j;
  j["generators"] = generators;
  j["relators"] = relators;
  return j;
}

Pi1Presentation pi1_presentation(const TruncatedSimplicialSet& x, std::uint32_t basepoint) {
  require_input(x.dim() >= 2, "pi1_presentation: dimension cap must be at least 2");
  require_input(basepoint < x.count(0), "pi1_presentation: basepoint out of range");
  const std::size_t nv = x.count(0), ne = x.count(1);
  std::vector<std::vector<std::uint32_t>> adj(nv);
  for (std::uint32_t e = 0; e < ne; ++e) {
    const auto s = x.face(1, e, 1).simplex, t = x.face(1, e, 0).simplex;
    adj[s].push_back(e);
    if (t != s) adj[t].push_back(e);
  }
  std::vector<char> seen(nv, 0), in_tree(ne, 0);
  std::deque<std::uint32_t> queue{basepoint};
  seen[basepoint] = 1;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto e : adj[v]) {
      const auto s = x.face(1, e, 1).simplex, t = x.face(1, e, 0).simplex;
      const auto w = s == v ? t : s;
      if (seen[w]) continue;
      seen[w] = 1;
      in_tree[e] = 1;
      queue.push_back(w);
    }
  }
  Pi1Presentation out;
  out.basepoint = basepoint;
  std::vector<int> letter(ne, 0);
  for (std::uint32_t e = 0; e < ne; ++e) {
    if (!seen[x.face(1, e, 1).simplex]) continue;
    if (in_tree[e]) {
      out.tree_edges.push_back(e);
    } else {
      out.generator_edges.push_back(e);
      letter[e] = static_cast<int>(out.generator_edges.size());
    }
  }
  out.presentation.generators = out.generator_edges.size();
  for (std::uint32_t t = 0; t < x.count(2); ++t) {
    if (!seen[x.vertex(2, t, 0)]) continue;
    auto edge_letter = [&](int i) {
      const FaceRef f = x.face(2, t, i);
      return f.degeneracy ? 0 : letter[f.simplex];
    };
    std::vector<int> word;
    for (int l : {edge_letter(2), edge_letter(0), -edge_letter(1)}) {
      if (l == 0) continue;
      if (!word.empty() && word.back() == -l)
        word.pop_back();
      else
        word.push_back(l);
    }
    while (word.size() >= 2 && word.front() == -word.back()) {
      word.erase(word.begin());
      word.pop_back();
    }
    if (!word.empty()) out.presentation.relators.push_back(std::move(word));
  }
  return out;
}

AbelianGroup abelianize(const GroupPresentation& p) {
  SparseMatrix m(p.generators, 0);
  for (const auto& r : p.relators) {
    std::vector<std::pair<std::uint32_t, Integer>> entries;
    for (int l : r) {
      require_input(l != 0 && std::size_t(std::abs(l)) <= p.generators, "abelianize: letter out of range");
      entries.emplace_back(static_cast<std::uint32_t>(std::abs(l) - 1), Integer(l > 0 ? 1 : -1));
    }
    m.add_column(make_column(std::move(entries)));
  }
  std::vector<Integer> inv;
  sparse_rank(m, nullptr, &inv);
  return AbelianGroup::cokernel(p.generators, inv);
}

std::vector<bool> isomorphisms(const PresentedCategory& c) {
  std::vector<bool> iso(c.morphism_count(), false);
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    if (iso[f]) continue;
    const ObjId x = c.dom(f), y = c.cod(f);
    for (MorId g : c.out(y)) {
      if (c.cod(g) != x) continue;
      if (c.compose(g, f) == c.identity(x) && c.compose(f, g) == c.identity(y)) {
        iso[f] = true;
        iso[g] = true;
        break;
      }
    }
  }
  return iso;
}

PresentedCategory::Sub skeleton(const PresentedCategory& c, const std::vector<bool>& isos) {
  require_input(isos.size() == c.morphism_count(), "skeleton: one flag per morphism required");
  UnionFind uf(c.object_count());
  for (MorId f = 0; f < c.morphism_count(); ++f)
    if (isos[f]) uf.unite(c.dom(f), c.cod(f));
  std::vector<ObjId> reps;
  for (ObjId x = 0; x < c.object_count(); ++x)
    if (uf.find(x) == x) reps.push_back(x);
  return c.full_subcategory(reps);
}

AbelianGroup category_h1(const PresentedCategory& c, ObjId basepoint, const std::vector<bool>& isos, Exec exec) {
  require_input(basepoint < c.object_count(), "category_h1: basepoint out of range");
  const auto comp = object_components(c);
  std::vector<ObjId> objs;
  for (ObjId x = 0; x < c.object_count(); ++x)
    if (comp[x] == comp[basepoint]) objs.push_back(x);
  const auto sub = c.full_subcategory(objs);
  std::vector<bool> sub_isos(sub.category.morphism_count());
  for (MorId f = 0; f < sub_isos.size(); ++f) sub_isos[f] = isos[sub.parent_morphism[f]];
  auto skel = skeleton(sub.category, sub_isos);
  skel.category.materialize(exec);
  const auto nv = nerve(skel.category, 2, exec);
  return homology(nv.sset, 1, exec);
}

}  // namespace glj
