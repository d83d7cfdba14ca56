#pragma once

// Commutative K-space monoids with finite discrete values on a window of
// I, Σ or J, and the monoid of path components of their homotopy colimit.

#include "glj/abelian.hpp"
#include "glj/catcore.hpp"
#include "glj/parallel.hpp"
#include "glj/permcat.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace glj {

struct MonoidCheckOptions {
  // Above this many instances a law is checked on random samples instead.
  std::uint64_t exhaustive_limit = 4'000'000;
  std::uint64_t samples = 200'000;
  std::uint64_t seed = 1;
  std::size_t max_reported = 20;
};

struct MonoidCheckReport {
  bool exhaustive = true;
  std::uint64_t instances_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

class TabulatedMonoid {
 public:
  using Labeler = std::function<std::string(ObjId, std::uint32_t)>;

  // mult[k * objects + l] is the table a * size(l) + b -> point of k ⊞ l,
  // empty when k ⊞ l lies outside the window.
  TabulatedMonoid(std::shared_ptr<const PermutativeWindow> window, std::vector<std::uint32_t> sizes,
                  std::vector<std::vector<std::uint32_t>> action, std::vector<std::vector<std::uint32_t>> mult,
                  std::uint32_t unit);

  const PermutativeWindow& window() const { return *window_; }
  std::shared_ptr<const PermutativeWindow> window_ptr() const { return window_; }
  const SetValuedDiagram& diagram() const { return *diagram_; }
  std::shared_ptr<const SetValuedDiagram> diagram_ptr() const { return diagram_; }

  std::uint32_t size(ObjId k) const { return diagram_->size(k); }
  std::uint32_t act(MorId f, std::uint32_t a) const { return diagram_->act(f, a); }
  bool has_mult(ObjId k, ObjId l) const { return product_[k * objects_ + l] != kNoObject; }
  ObjId product(ObjId k, ObjId l) const { return product_[k * objects_ + l]; }
  std::uint32_t mult(ObjId k, std::uint32_t a, ObjId l, std::uint32_t b) const {
    return mult_[k * objects_ + l][a * size(l) + b];
  }
  const std::vector<std::uint32_t>& mult_table(ObjId k, ObjId l) const { return mult_[k * objects_ + l]; }
  std::uint32_t unit() const { return unit_; }
  std::uint64_t element_count() const;

  void set_labeler(Labeler l) { labeler_ = std::move(l); }
  std::string element_label(ObjId k, std::uint32_t a) const;

  // Functoriality, unit, associativity, naturality of mult and twisted
  // commutativity (mult(a,b) moved along the symmetry equals mult(b,a)).
  MonoidCheckReport check(const MonoidCheckOptions& opts = {}) const;

  ElementsCategory elements() const { return category_of_elements(*diagram_); }

 private:
  static constexpr ObjId kNoObject = UINT32_MAX;
  std::shared_ptr<const PermutativeWindow> window_;
  std::shared_ptr<const SetValuedDiagram> diagram_;
  std::size_t objects_;
  std::vector<ObjId> product_;
  std::vector<std::vector<std::uint32_t>> mult_;
  std::uint32_t unit_;
  Labeler labeler_;
};

TabulatedMonoid terminal_monoid(std::shared_ptr<const PermutativeWindow> window);
// The monoidal unit of ⊠: the representable K(0, -).
TabulatedMonoid unit_monoid(std::shared_ptr<const PermutativeWindow> window);

// Free commutative monoid on the representable at a J-object g. The value
// at l is the disjoint union over p of Hom(g^⊞p, l) / Σ_p, with Σ_p acting
// by block permutations; each orbit is represented by its smallest morphism.
struct FreeMonoid {
  TabulatedMonoid monoid;
  KObject generator;
  unsigned max_length = 0;  // largest p with g^⊞p in the window
  std::vector<std::vector<unsigned>> length;      // per object, per point
  std::vector<std::vector<MorId>> representative;  // per object, per point
  std::vector<std::string> warnings;
};
FreeMonoid free_monoid(KObject generator, std::shared_ptr<const PermutativeWindow> window);

// Day convolution A ⊠ B restricted to the window: the value at k is the set
// of classes of (k1, k2, f: k1 ⊞ k2 -> k, a, b).
struct BoxProduct {
  TabulatedMonoid monoid;
  // For each point of (A ⊠ B)(k): its smallest representative.
  struct Rep {
    ObjId k1, k2;
    MorId f;
    std::uint32_t a, b;
  };
  std::vector<std::vector<Rep>> representative;
};
BoxProduct boxtimes(const TabulatedMonoid& a, const TabulatedMonoid& b);

// Finitely presented commutative monoid; words are exponent vectors.
struct FPCommMonoid {
  std::vector<std::string> generators;
  std::vector<std::pair<std::vector<unsigned>, std::vector<unsigned>>> relations;
  nlohmann::json to_json() const;
};

enum class UnitStatus { unit, not_unit, unknown };
std::string to_string(UnitStatus s);

struct UnitReport {
  UnitStatus status = UnitStatus::unknown;
  // For unit: a word w (list of elements) with x * w = 1.
  std::vector<std::uint32_t> certificate;
};

// Unit status of every generator of a presentation, by breadth-first
// saturation of the class of the empty word under the relations (both
// directions), exploring words up to the given length.
std::vector<UnitReport> presentation_units(const FPCommMonoid& m, std::size_t max_word_length);

// π₀ of the homotopy colimit: components of the category of elements with
// the partial multiplication induced by mult and ⊞.
struct Pi0Monoid {
  std::size_t size = 0;
  std::vector<std::uint32_t> component;  // per element object of El(A)
  std::vector<std::pair<ObjId, std::uint32_t>> representative;  // per class: smallest element
  std::vector<std::string> labels;
  std::uint32_t unit = 0;
  std::vector<std::int64_t> table;  // size * size, -1 where undefined in the window
  std::uint64_t pairs_checked = 0;  // element pairs used to confirm well-definedness
  std::size_t window_diameter = 0;

  std::optional<std::uint32_t> multiply(std::uint32_t x, std::uint32_t y) const {
    const auto v = table[x * size + y];
    return v < 0 ? std::nullopt : std::optional<std::uint32_t>(std::uint32_t(v));
  }
  FPCommMonoid presentation() const;
  nlohmann::json to_json() const;
};
Pi0Monoid pi0_hocolim(const TabulatedMonoid& a);

// Unit status per class. x is a unit if a left-associated product x*y1*...*yr
// reaches the unit class with r <= bound; not a unit if every such product
// has been exhausted; unknown if the bound cut the search. bound 0 means
// twice the window diameter.
std::vector<UnitReport> unit_status(const Pi0Monoid& m, std::size_t bound = 0);

struct UnitsSubmonoid {
  TabulatedMonoid monoid;
  std::vector<std::vector<std::uint32_t>> old_point;  // per object, per new point
  std::vector<UnitReport> status;                      // per class of the original
};
UnitsSubmonoid units_submonoid(const TabulatedMonoid& a, std::size_t bound = 0);

struct GrouplikeReport {
  bool grouplike = false;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> inverses;  // (x, y) with x*y = 1
  std::optional<std::uint32_t> first_failure;
  UnitStatus failure_status = UnitStatus::unit;
  // Shear map (x, y) -> (x, x*y) on pairs with a defined product.
  std::uint64_t shear_domain = 0, shear_image = 0, grid = 0;
  bool shear_injective = false;
  nlohmann::json to_json() const;
};
GrouplikeReport grouplike_check(const Pi0Monoid& m, std::size_t bound = 0);

struct DegreeMap {
  std::vector<int> degree;  // per class
  bool additive = true;
  std::uint64_t products_checked = 0;
};
// Degree m2 - m1 of the objects in each class; InternalError if a class
// spans two degrees.
DegreeMap degree_homomorphism(const TabulatedMonoid& a, const Pi0Monoid& m);

// H₁ of each component of the homotopy colimit (indexed like the classes
// of m), on a skeleton of El(A). Over J every endomorphism is invertible,
// so the isomorphisms of El(A) are the elements over endomorphisms.
std::vector<AbelianGroup> hocolim_h1(const TabulatedMonoid& a, const Pi0Monoid& m, Exec exec = Exec::parallel);

// Restriction along Δ: I -> J, to the I-window of bound min(bound1, bound2).
TabulatedMonoid restrict_along_delta(const TabulatedMonoid& a);

// JSON: {"schema": "glj.monoid/1", "category", "bound": [b1, b2], "values":
// [{"object", "size"}], "action": [{"morphism", "map"}], "mult": [{"left",
// "right", "table"}], "unit"}. Action entries may be omitted when the target
// value has one point (constant map), likewise mult entries.
nlohmann::json to_json(const TabulatedMonoid& a);
TabulatedMonoid monoid_from_json(const nlohmann::json& j);

}  // namespace glj
