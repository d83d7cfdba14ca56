#pragma once

// Components, integral homology, and edge-path presentations of π₁.

#include "glj/abelian.hpp"
#include "glj/catcore.hpp"
#include "glj/parallel.hpp"
#include "glj/simplicial.hpp"

#include <json.hpp>

#include <cstdint>
#include <vector>

namespace glj {

// Component index per vertex, numbered by first appearance.
std::vector<std::uint32_t> components(const TruncatedSimplicialSet& x, std::size_t* count = nullptr);

// The sub-simplicial set of simplices whose vertices lie in the component of
// the given vertex. old_ids[n][new] gives the original numbering.
struct ComponentRestriction {
  TruncatedSimplicialSet sset;
  std::vector<std::vector<std::uint32_t>> old_ids;
};
ComponentRestriction restrict_to_component(const TruncatedSimplicialSet& x, std::uint32_t vertex);

struct HomologyStats {
  std::size_t boundary_rank_n = 0, boundary_rank_next = 0;
  SparseSmithStats snf;
};

// H_n of the normalized chain complex; needs n + 1 <= dim.
AbelianGroup homology(const TruncatedSimplicialSet& x, int n, Exec exec = Exec::parallel,
                      HomologyStats* stats = nullptr);

struct GroupPresentation {
  std::size_t generators = 0;
  // Letters are +k / -k for generator k-1 and its inverse.
  std::vector<std::vector<int>> relators;
  nlohmann::json to_json() const;
};

struct Pi1Presentation {
  GroupPresentation presentation;
  std::uint32_t basepoint = 0;
  std::vector<std::uint32_t> tree_edges;       // ascending
  std::vector<std::uint32_t> generator_edges;  // edge of generator k
};

// Edge-path presentation for the component of the basepoint. Spanning tree
// by BFS from the basepoint, scanning incident edges in increasing id.
Pi1Presentation pi1_presentation(const TruncatedSimplicialSet& x, std::uint32_t basepoint);

AbelianGroup abelianize(const GroupPresentation& p);

// Isomorphisms of a category: f is invertible iff some g in Hom(cod f, dom f)
// is a two-sided inverse.
std::vector<bool> isomorphisms(const PresentedCategory& c);

// Full subcategory on one object per isomorphism class (the smallest id);
// the inclusion is an equivalence, so the nerves are homotopy equivalent.
PresentedCategory::Sub skeleton(const PresentedCategory& c, const std::vector<bool>& isos);

// H₁ of the nerve of the component of the basepoint, computed on a skeleton
// of that component.
AbelianGroup category_h1(const PresentedCategory& c, ObjId basepoint, const std::vector<bool>& isos,
                         Exec exec = Exec::parallel);

}  // namespace glj
