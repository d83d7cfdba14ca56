#pragma once

// Truncated simplicial sets stored by their nondegenerate simplices.
//
// A face of an n-simplex is a (possibly degenerate) (n-1)-simplex, written
// as a nondegenerate simplex y together with a degeneracy word. The word is
// a bitmask J over 0..n-2: the face equals s_{j_k} ... s_{j_1} y for the
// elements j_1 < ... < j_k of J. Mask 0 means the face is y itself.

#include "glj/catcore.hpp"
#include "glj/parallel.hpp"
#include "glj/snf.hpp"

#include <json.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace glj {

struct FaceRef {
  std::uint32_t simplex = 0;
  std::uint32_t degeneracy = 0;
  friend bool operator==(const FaceRef&, const FaceRef&) = default;
};

class TruncatedSimplicialSet {
 public:
  TruncatedSimplicialSet() = default;
  explicit TruncatedSimplicialSet(int dim_cap);

  int dim() const { return static_cast<int>(counts_.size()) - 1; }
  std::size_t count(int n) const { return counts_[n]; }
  // Resizes level n (n >= 1 also allocates its face table).
  void set_count(int n, std::size_t c);
  FaceRef face(int n, std::uint32_t x, int i) const { return faces_[n][std::size_t(x) * (n + 1) + i]; }
  void set_face(int n, std::uint32_t x, int i, FaceRef f) { faces_[n][std::size_t(x) * (n + 1) + i] = f; }
  std::vector<FaceRef>& face_table(int n) { return faces_[n]; }
  const std::vector<FaceRef>& face_table(int n) const { return faces_[n]; }

  // d_i of a possibly degenerate n-simplex.
  FaceRef face_of(int n, FaceRef x, int i) const;
  // Vertex v (0..n) of a nondegenerate n-simplex.
  std::uint32_t vertex(int n, std::uint32_t x, int v) const;

  // d_i d_j = d_{j-1} d_i for i < j on every stored simplex; also checks
  // ranges of the face tables. Returns violations, capped.
  std::vector<std::string> check(std::size_t max_reported = 20) const;

  std::vector<std::string> vertex_labels;  // optional

  friend bool operator==(const TruncatedSimplicialSet&, const TruncatedSimplicialSet&) = default;

 private:
  std::vector<std::size_t> counts_;
  std::vector<std::vector<FaceRef>> faces_;  // faces_[0] unused
};

// Disjoint union; simplices of b are numbered after those of a.
TruncatedSimplicialSet disjoint_union(const TruncatedSimplicialSet& a, const TruncatedSimplicialSet& b);

// The simplicial circle Δ[1]/∂Δ[1]: one vertex, one nondegenerate edge.
TruncatedSimplicialSet simplicial_circle(int dim_cap);

// Boundary of the standard simplex Δ[k] (k >= 1), truncated at dim_cap.
TruncatedSimplicialSet simplex_boundary(int k, int dim_cap);

// Renumber simplices level by level along the given permutations
// (perm[n][old] = new).
TruncatedSimplicialSet relabel(const TruncatedSimplicialSet& x,
                               const std::vector<std::vector<std::uint32_t>>& perm);

// Integral boundary matrix ∂_n : C_n -> C_{n-1} on normalized chains.
SparseMatrix boundary_matrix(const TruncatedSimplicialSet& x, int n, Exec exec = Exec::parallel);

// JSON: {"schema": "glj.sset/1", "dim": d, "counts": [...],
// "faces": [null, [[[y, mask], ...], ...], ...]}
nlohmann::json to_json(const TruncatedSimplicialSet& x);
TruncatedSimplicialSet sset_from_json(const nlohmann::json& j);

// Nerve of a category. Level-n nondegenerate simplices are chains
// (f_1, ..., f_n) of non-identity morphisms, cod f_k = dom f_{k+1}.
struct Nerve {
  TruncatedSimplicialSet sset;
  // For n >= 1: prefix[n][x] is the (n-1)-chain obtained by dropping f_n
  // (for n = 1, the domain object) and last[n][x] = f_n.
  std::vector<std::vector<std::uint32_t>> prefix;
  std::vector<std::vector<MorId>> last;
  // child_offset[n][c]: first level-n id among chains extending the
  // (n-1)-chain c (objects for n = 1); one extra entry at the end.
  std::vector<std::vector<std::uint64_t>> child_offset;
  // Per non-identity morphism: position among the non-identities out of
  // its domain. UINT32_MAX for identities.
  std::vector<std::uint32_t> nonid_pos;

  std::vector<MorId> chain(int n, std::uint32_t x) const;
  // Id of a chain of non-identities starting at object start (empty chain:
  // the object itself).
  std::uint32_t find(ObjId start, std::span<const MorId> chain) const;
};

Nerve nerve(const PresentedCategory& c, int dim_cap, Exec exec = Exec::parallel);

// Number of all n-chains of c, identities included (degenerate simplices
// counted).
Integer total_chains(const PresentedCategory& c, int n);

}  // namespace glj
