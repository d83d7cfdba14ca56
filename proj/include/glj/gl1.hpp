#pragma once

// Graded units: a presented abelian group (π_*E)^× with a degree map and a
// sign, and what it says about the low homotopy of the graded units
// spectrum bgl₁*(E).
//
// The group is Z^k / L, L spanned by order_i·e_i and the relation rows.
// Elements are exponent vectors over the generators.

#include "glj/abelian.hpp"
#include "glj/integer.hpp"
#include "glj/snf.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace glj {

struct UnitGenerator {
  std::string name;
  std::int64_t degree = 0;
  std::uint64_t order = 0;  // 0: infinite
};

struct GradedUnitGroup {
  std::vector<UnitGenerator> generators;
  std::vector<std::vector<std::int64_t>> relations;
  std::vector<std::int64_t> sign;  // class of -1

  // InputError unless well formed: relations and orders have degree 0,
  // deg(sign) = 0 and sign² = 1.
  void check() const;
  std::size_t rank() const { return generators.size(); }
  std::int64_t degree(const std::vector<Integer>& x) const;
  // Columns spanning L.
  DenseMatrix relation_lattice() const;
  bool is_identity(const std::vector<Integer>& x) const;
  // "u^2 t^-1", "1" for the empty word
  std::string word(const std::vector<Integer>& x) const;

  nlohmann::json to_json() const;
  static GradedUnitGroup from_json(const nlohmann::json& j);
};

// Z^generators / column span of relations.
struct PresentedGroup {
  std::string name;
  std::size_t generators = 0;
  DenseMatrix relations;
  AbelianGroup structure() const;
};

// A --f--> B --g--> C with matrices on generators: g∘f lands in the
// relations of C and ker g is contained in im f + relations of B.
bool exact_at(const DenseMatrix& f, const PresentedGroup& b, const DenseMatrix& g, const PresentedGroup& c);

// {±1} -> (π₀E)^× -> (π_*E)^×/{±1} -> Z -> Z/n -> 0
struct FiveTermSequence {
  std::array<PresentedGroup, 5> groups;
  std::array<DenseMatrix, 4> maps;    // maps[i]: groups[i] -> groups[i+1]
  std::array<bool, 3> exact{};        // at groups 1, 2, 3
  bool onto_last = false;             // Z -> Z/n surjective
  std::int64_t periodicity = 0;
  AbelianGroup pi0, pi1;              // of bgl₁*(E)
  bool ok() const { return exact[0] && exact[1] && exact[2] && onto_last; }
  nlohmann::json to_json() const;
};

// Nonnegative generator of the degree image.
std::int64_t periodicity(const GradedUnitGroup& g);
FiveTermSequence five_term(const GradedUnitGroup& g);
// The image of the generator of π₁ of the sphere: the sign.
std::vector<Integer> hopf_image(const GradedUnitGroup& g);
// Sign nontrivial in (π₀E)^×.
bool k_invariant_nonzero(const GradedUnitGroup& g);

struct KInvariantReport {
  bool nonzero = false;  // false means the criterion does not apply, not that it vanishes
  std::string reason;
  std::optional<std::string> named_class;  // "Sq^2" when π₀ = π₁ = Z/2
  std::vector<std::string> notes;
};
KInvariantReport k_invariant(const GradedUnitGroup& g, const FiveTermSequence& s);

// Units of the connective cover: the degree-0 part, generated by a basis of
// ker(deg), with the same sign. inclusion maps its generators into g.
struct ConnectiveCover {
  GradedUnitGroup group;
  DenseMatrix inclusion;
};
ConnectiveCover connective_cover(const GradedUnitGroup& g);

struct Gl1Report {
  GradedUnitGroup input;
  FiveTermSequence sequence;
  KInvariantReport k_invariant;
  std::vector<Integer> hopf;
  nlohmann::json to_json() const;
  std::string to_table() const;
};
Gl1Report gl1_report(const GradedUnitGroup& g);

}  // namespace glj
