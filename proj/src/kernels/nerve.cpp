#include "kernels/kernels.hpp"

#include <omp.h>

#include <array>
#include <bit>

namespace glj::kernels {

namespace {

constexpr int kMaxChain = 30;

void extend_one(const PresentedCategory& c, const std::vector<std::vector<MorId>>& nonid_out, Nerve& nv,
                int n, std::size_t p) {
  std::uint64_t id = nv.child_offset[n][p];
  for (MorId g : nonid_out[c.cod(nv.last[n - 1][p])]) {
    nv.prefix[n][id] = static_cast<std::uint32_t>(p);
    nv.last[n][id] = g;
    ++id;
  }
}

void faces_one(const PresentedCategory& c, Nerve& nv, int n, std::uint32_t x) {
  std::array<MorId, kMaxChain> f{};
  {
    std::uint32_t y = x;
    for (int k = n; k >= 1; --k) {
      f[k - 1] = nv.last[k][y];
      y = nv.prefix[k][y];
    }
  }
  auto& sset = nv.sset;
  if (n == 1) {
    sset.set_face(1, x, 0, {c.cod(f[0]), 0});
    sset.set_face(1, x, 1, {c.dom(f[0]), 0});
    return;
  }
  std::array<MorId, kMaxChain> buf{};
  sset.set_face(n, x, 0, {nv.find(c.dom(f[1]), {f.data() + 1, std::size_t(n - 1)}), 0});
  sset.set_face(n, x, n, {nv.prefix[n][x], 0});
  for (int i = 1; i < n; ++i) {
    const MorId h = c.compose(f[i], f[i - 1]);
    int len = 0;
    for (int k = 0; k < i - 1; ++k) buf[len++] = f[k];
    if (c.is_identity(h)) {
      for (int k = i + 1; k < n; ++k) buf[len++] = f[k];
      sset.set_face(n, x, i, {nv.find(c.dom(f[0]), {buf.data(), std::size_t(len)}), 1u << (i - 1)});
    } else {
      buf[len++] = h;
      for (int k = i + 1; k < n; ++k) buf[len++] = f[k];
      sset.set_face(n, x, i, {nv.find(c.dom(f[0]), {buf.data(), std::size_t(len)}), 0});
    }
  }
}

void boundary_one(const TruncatedSimplicialSet& x, int n, std::vector<SparseColumn>& columns, std::uint32_t s) {
  std::vector<std::pair<std::uint32_t, Integer>> entries;
  entries.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    const FaceRef f = x.face(n, s, i);
    if (f.degeneracy == 0) entries.emplace_back(f.simplex, Integer(i % 2 == 0 ? 1 : -1));
  }
  columns[s] = make_column(std::move(entries));
}

}  // namespace

void extend_chains(const PresentedCategory& c, const std::vector<std::vector<MorId>>& nonid_out, Nerve& nv,
                   int n, Exec exec) {
  const std::size_t total = nv.child_offset[n].back();
  nv.prefix[n].resize(total);
  nv.last[n].resize(total);
  const auto parents = static_cast<std::int64_t>(nv.last[n - 1].size());
  if (exec == Exec::serial) {
    for (std::int64_t p = 0; p < parents; ++p) extend_one(c, nonid_out, nv, n, std::size_t(p));
    return;
  }
#pragma omp parallel for schedule(dynamic, 256) num_threads(num_threads())
  for (std::int64_t p = 0; p < parents; ++p) extend_one(c, nonid_out, nv, n, std::size_t(p));
}

void nerve_faces(const PresentedCategory& c, Nerve& nv, int n, Exec exec) {
  const auto count = static_cast<std::int64_t>(nv.sset.count(n));
  if (exec == Exec::serial) {
    for (std::int64_t x = 0; x < count; ++x) faces_one(c, nv, n, std::uint32_t(x));
    return;
  }
#pragma omp parallel for schedule(dynamic, 1024) num_threads(num_threads())
  for (std::int64_t x = 0; x < count; ++x) faces_one(c, nv, n, std::uint32_t(x));
}

void assemble_boundary(const TruncatedSimplicialSet& x, int n, std::vector<SparseColumn>& columns, Exec exec) {
  const auto count = static_cast<std::int64_t>(x.count(n));
  if (exec == Exec::serial) {
    for (std::int64_t s = 0; s < count; ++s) boundary_one(x, n, columns, std::uint32_t(s));
    return;
  }
#pragma omp parallel for schedule(dynamic, 4096) num_threads(num_threads())
  for (std::int64_t s = 0; s < count; ++s) boundary_one(x, n, columns, std::uint32_t(s));
}

}  // namespace glj::kernels
