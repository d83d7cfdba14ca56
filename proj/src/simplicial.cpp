#include "glj/simplicial.hpp"

#include "glj/errors.hpp"
#include "kernels/kernels.hpp"

#include <algorithm>
#include <bit>

namespace glj {

namespace {

// Surjection [n] -> [n - |J|] collapsing t and t+1 for every t in J.
std::vector<int> surjection_of(std::uint32_t mask, int n) {
  std::vector<int> s(n + 1);
  int v = 0;
  for (int t = 0; t <= n; ++t) {
    s[t] = v;
    if (t < n && !(mask >> t & 1u)) ++v;
  }
  return s;
}

std::uint32_t mask_of(const std::vector<int>& s) {
  std::uint32_t mask = 0;
  for (std::size_t t = 0; t + 1 < s.size(); ++t)
    if (s[t] == s[t + 1]) mask |= 1u << t;
  return mask;
}

}  // namespace

TruncatedSimplicialSet::TruncatedSimplicialSet(int dim_cap) {
  require_input(dim_cap >= 0 && dim_cap < 31, "simplicial set: dimension cap out of range");
  counts_.assign(dim_cap + 1, 0);
  faces_.resize(dim_cap + 1);
}

void TruncatedSimplicialSet::set_count(int n, std::size_t c) {
  counts_[n] = c;
  if (n >= 1) faces_[n].assign(c * (n + 1), FaceRef{});
}

FaceRef TruncatedSimplicialSet::face_of(int n, FaceRef x, int i) const {
  if (x.degeneracy == 0) return face(n, x.simplex, i);
  const auto eta = surjection_of(x.degeneracy, n);
  const int m = eta.back();
  // eta ∘ δ_i
  std::vector<int> comp;
  comp.reserve(n);
  for (int t = 0; t <= n; ++t)
    if (t != i) comp.push_back(eta[t]);
  const bool onto = (i > 0 && eta[i - 1] == eta[i]) || (i < n && eta[i + 1] == eta[i]);
  if (onto) return {x.simplex, mask_of(comp)};
  // eta ∘ δ_i = δ_v ∘ eta' with v = eta(i) missed.
  const int v = eta[i];
  for (int& c : comp)
    if (c > v) --c;
  const FaceRef y = face(m, x.simplex, v);
  const auto mu = surjection_of(y.degeneracy, m - 1);
  std::vector<int> total(comp.size());
  for (std::size_t t = 0; t < comp.size(); ++t) total[t] = mu[comp[t]];
  return {y.simplex, mask_of(total)};
}

std::uint32_t TruncatedSimplicialSet::vertex(int n, std::uint32_t x, int v) const {
  // Vertex v survives the faces d_n ... d_{v+1} followed by d_0 ... d_0.
  FaceRef cur{x, 0};
  int k = n;
  while (k > v) cur = face_of(k, cur, k), --k;
  while (k > 0) cur = face_of(k, cur, 0), --k;
  return cur.simplex;
}

std::vector<std::string> TruncatedSimplicialSet::check(std::size_t max_reported) const {
  std::vector<std::string> out;
  auto report = [&](const std::string& s) {
    if (out.size() < max_reported) out.push_back(s);
  };
  for (int n = 1; n <= dim(); ++n)
    for (std::uint32_t x = 0; x < counts_[n]; ++x)
      for (int i = 0; i <= n; ++i) {
        const FaceRef f = face(n, x, i);
        const int k = std::popcount(f.degeneracy);
        if (k > n - 1 || (n >= 1 && (f.degeneracy >> std::max(n - 1, 0)) != 0) ||
            f.simplex >= counts_[n - 1 - k])
          report("face d_" + std::to_string(i) + " of simplex " + std::to_string(x) + " in dimension " +
                 std::to_string(n) + " is malformed");
      }
  if (!out.empty()) return out;
  for (int n = 2; n <= dim(); ++n)
    for (std::uint32_t x = 0; x < counts_[n]; ++x)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          const FaceRef a = face_of(n - 1, face(n, x, j), i);
          const FaceRef b = face_of(n - 1, face(n, x, i), j - 1);
          if (!(a == b))
            report("d_" + std::to_string(i) + " d_" + std::to_string(j) + " != d_" + std::to_string(j - 1) +
                   " d_" + std::to_string(i) + " on simplex " + std::to_string(x) + " in dimension " +
                   std::to_string(n));
        }
  return out;
}

TruncatedSimplicialSet disjoint_union(const TruncatedSimplicialSet& a, const TruncatedSimplicialSet& b) {
  const int d = std::min(a.dim(), b.dim());
  TruncatedSimplicialSet u(d);
  for (int n = 0; n <= d; ++n) u.set_count(n, a.count(n) + b.count(n));
  for (int n = 1; n <= d; ++n) {
    for (std::uint32_t x = 0; x < a.count(n); ++x)
      for (int i = 0; i <= n; ++i) u.set_face(n, x, i, a.face(n, x, i));
    for (std::uint32_t x = 0; x < b.count(n); ++x)
      for (int i = 0; i <= n; ++i) {
        FaceRef f = b.face(n, x, i);
        f.simplex += static_cast<std::uint32_t>(a.count(n - 1 - std::popcount(f.degeneracy)));
        u.set_face(n, static_cast<std::uint32_t>(a.count(n) + x), i, f);
      }
  }
  return u;
}

TruncatedSimplicialSet simplicial_circle(int dim_cap) {
  TruncatedSimplicialSet s(dim_cap);
  s.set_count(0, 1);
  if (dim_cap >= 1) s.set_count(1, 1);  // both faces are the vertex
  return s;
}

TruncatedSimplicialSet simplex_boundary(int k, int dim_cap) {
  require_input(k >= 1 && k <= 12, "simplex_boundary: k out of range");
  const int d = std::min(dim_cap, k - 1);
  TruncatedSimplicialSet s(dim_cap);
  // Level n: subsets of {0..k} with n+1 elements, as bitmasks in increasing order.
  std::vector<std::vector<std::uint32_t>> subsets(d + 1);
  for (std::uint32_t m = 1; m < (1u << (k + 1)); ++m) {
    const int n = std::popcount(m) - 1;
    if (n <= d) subsets[n].push_back(m);
  }
  for (int n = 0; n <= d; ++n) s.set_count(n, subsets[n].size());
  for (int n = 1; n <= d; ++n)
    for (std::uint32_t x = 0; x < subsets[n].size(); ++x) {
      std::uint32_t m = subsets[n][x];
      int i = 0;
      for (int e = 0; e <= k; ++e) {
        if (!(m >> e & 1u)) continue;
        const std::uint32_t f = m & ~(1u << e);
        const auto it = std::lower_bound(subsets[n - 1].begin(), subsets[n - 1].end(), f);
        s.set_face(n, x, i++, {static_cast<std::uint32_t>(it - subsets[n - 1].begin()), 0});
      }
    }
  return s;
}

TruncatedSimplicialSet relabel(const TruncatedSimplicialSet& x,
                               const std::vector<std::vector<std::uint32_t>>& perm) {
  TruncatedSimplicialSet y(x.dim());
  for (int n = 0; n <= x.dim(); ++n) {
    require_input(perm[n].size() == x.count(n), "relabel: permutation size mismatch");
    y.set_count(n, x.count(n));
  }
  for (int n = 1; n <= x.dim(); ++n)
    for (std::uint32_t s = 0; s < x.count(n); ++s)
      for (int i = 0; i <= n; ++i) {
        FaceRef f = x.face(n, s, i);
        f.simplex = perm[n - 1 - std::popcount(f.degeneracy)][f.simplex];
        y.set_face(n, perm[n][s], i, f);
      }
  if (!x.vertex_labels.empty()) {
    y.vertex_labels.resize(x.count(0));
    for (std::uint32_t v = 0; v < x.count(0); ++v) y.vertex_labels[perm[0][v]] = x.vertex_labels[v];
  }
  return y;
}

SparseMatrix boundary_matrix(const TruncatedSimplicialSet& x, int n, Exec exec) {
  require_input(n >= 0 && n <= x.dim(), "boundary_matrix: dimension out of range");
  if (n == 0) return SparseMatrix(0, x.count(0));
  std::vector<SparseColumn> cols(x.count(n));
  kernels::assemble_boundary(x, n, cols, exec);
  SparseMatrix m(x.count(n - 1), 0);
  for (auto& c : cols) m.add_column(std::move(c));
  return m;
}

nlohmann::json to_json(const TruncatedSimplicialSet& x) {
  nlohmann::json j;
  j["schema"] = "glj.sset/1";
  j["dim"] = x.dim();
  auto& counts = j["counts"] = nlohmann::json::array();
  for (int n = 0; n <= x.dim(); ++n) counts.push_back(x.count(n));
  auto& faces = j["faces"] = nlohmann::json::array();
  faces.push_back(nullptr);
  for (int n = 1; n <= x.dim(); ++n) {
    auto level = nlohmann::json::array();
    for (std::uint32_t s = 0; s < x.count(n); ++s) {
      auto fs = nlohmann::json::array();
      for (int i = 0; i <= n; ++i) fs.push_back({x.face(n, s, i).simplex, x.face(n, s, i).degeneracy});
      level.push_back(std::move(fs));
    }
    faces.push_back(std::move(level));
  }
  if (!x.vertex_labels.empty()) j["vertex_labels"] = x.vertex_labels;
  return j;
}

TruncatedSimplicialSet sset_from_json(const nlohmann::json& j) {
  try {
    require_input(j.value("schema", "") == "glj.sset/1", "simplicial set JSON: expected schema glj.sset/1");
    TruncatedSimplicialSet x(j.at("dim").get<int>());
    const auto& counts = j.at("counts");
    require_input(counts.size() == std::size_t(x.dim() + 1), "simplicial set JSON: counts length");
    for (int n = 0; n <= x.dim(); ++n) x.set_count(n, counts[n].get<std::size_t>());
    for (int n = 1; n <= x.dim(); ++n) {
      const auto& level = j.at("faces").at(n);
      require_input(level.size() == x.count(n), "simplicial set JSON: face table size");
      for (std::uint32_t s = 0; s < x.count(n); ++s) {
        require_input(level[s].size() == std::size_t(n + 1), "simplicial set JSON: face arity");
        for (int i = 0; i <= n; ++i)
          x.set_face(n, s, i, {level[s][i].at(0).get<std::uint32_t>(), level[s][i].at(1).get<std::uint32_t>()});
      }
    }
    if (j.contains("vertex_labels")) x.vertex_labels = j["vertex_labels"].get<std::vector<std::string>>();
    const auto problems = x.check(1);
    require_input(problems.empty(), "simplicial set JSON: " + (problems.empty() ? "" : problems.front()));
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("simplicial set JSON: ") + e.what());
  }
}

// ------------------------------------------------------------------ nerve

std::vector<MorId> Nerve::chain(int n, std::uint32_t x) const {
  std::vector<MorId> out(n);
  for (int k = n; k >= 1; --k) {
    out[k - 1] = last[k][x];
    x = prefix[k][x];
  }
  return out;
}

std::uint32_t Nerve::find(ObjId start, std::span<const MorId> chain) const {
  std::uint64_t id = start;
  for (std::size_t k = 0; k < chain.size(); ++k) id = child_offset[k + 1][id] + nonid_pos[chain[k]];
  return static_cast<std::uint32_t>(id);
}

Nerve nerve(const PresentedCategory& c, int dim_cap, Exec exec) {
  require_input(dim_cap >= 1, "nerve: dimension cap must be at least 1");
  Nerve nv;
  nv.sset = TruncatedSimplicialSet(dim_cap);
  nv.prefix.resize(dim_cap + 1);
  nv.last.resize(dim_cap + 1);
  nv.child_offset.resize(dim_cap + 1);
  nv.nonid_pos.assign(c.morphism_count(), UINT32_MAX);

  std::vector<std::vector<MorId>> nonid_out(c.object_count());
  for (ObjId x = 0; x < c.object_count(); ++x)
    for (MorId f : c.out(x))
      if (!c.is_identity(f)) {
        nv.nonid_pos[f] = static_cast<std::uint32_t>(nonid_out[x].size());
        nonid_out[x].push_back(f);
      }

  nv.sset.set_count(0, c.object_count());
  auto& off1 = nv.child_offset[1];
  off1.assign(c.object_count() + 1, 0);
  for (ObjId x = 0; x < c.object_count(); ++x) off1[x + 1] = off1[x] + nonid_out[x].size();
  if (off1.back() >= UINT32_MAX) throw WindowError("nerve: too many simplices in dimension 1");
  nv.prefix[1].resize(off1.back());
  nv.last[1].resize(off1.back());
  for (ObjId x = 0; x < c.object_count(); ++x)
    for (std::size_t k = 0; k < nonid_out[x].size(); ++k) {
      nv.prefix[1][off1[x] + k] = x;
      nv.last[1][off1[x] + k] = nonid_out[x][k];
    }
  nv.sset.set_count(1, off1.back());

  for (int n = 2; n <= dim_cap; ++n) {
    auto& off = nv.child_offset[n];
    const auto& prev_last = nv.last[n - 1];
    off.assign(prev_last.size() + 1, 0);
    for (std::size_t p = 0; p < prev_last.size(); ++p)
      off[p + 1] = off[p] + nonid_out[c.cod(prev_last[p])].size();
    if (off.back() >= UINT32_MAX)
      throw WindowError("nerve: too many simplices in dimension " + std::to_string(n));
    kernels::extend_chains(c, nonid_out, nv, n, exec);
    nv.sset.set_count(n, off.back());
  }
  for (int n = 1; n <= dim_cap; ++n) kernels::nerve_faces(c, nv, n, exec);
  if (c.object_count() > 0) {
    nv.sset.vertex_labels.reserve(c.object_count());
    for (ObjId x = 0; x < c.object_count(); ++x) nv.sset.vertex_labels.push_back(c.object_label(x));
  }
  return nv;
}

Integer total_chains(const PresentedCategory& c, int n) {
  std::vector<Integer> ways(c.object_count(), Integer(1));
  for (int k = 0; k < n; ++k) {
    std::vector<Integer> next(c.object_count(), Integer(0));
    for (MorId f = 0; f < c.morphism_count(); ++f) next[c.cod(f)] += ways[c.dom(f)];
    ways = std::move(next);
  }
  Integer total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

}  // namespace glj
