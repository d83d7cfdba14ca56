#pragma once

// Finite based sets, the Shimada–Shimakawa categories HK(S) over a window of
// I, Σ or J, the Γ-space b(K) and the Γ-space γ(A) of a tabulated monoid.
//
// Subsets of S̄ = {1..k} are bitmasks (bit i-1 for i). All K-data of an HK
// object lives in an ambient window large enough to hold every s_U.

#include "glj/catcore.hpp"
#include "glj/jmonoid.hpp"
#include "glj/permcat.hpp"
#include "glj/simplicial.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace glj {

// A based map k⁺ -> l⁺; values[0] == 0.
struct BasedMap {
  unsigned source = 0, target = 0;
  std::vector<unsigned> values;

  unsigned operator()(unsigned i) const { return values[i]; }
  // Preimage of a subset of the target, as a subset of the source.
  std::uint32_t preimage(std::uint32_t mask) const;
  void check() const;  // InputError unless well formed

  static BasedMap identity(unsigned k);
  static BasedMap fold(unsigned k);                   // every i >= 1 to 1
  static BasedMap projection(unsigned k, unsigned j);  // j to 1, rest to 0
  friend bool operator==(const BasedMap&, const BasedMap&) = default;
};
BasedMap compose(const BasedMap& g, const BasedMap& f);
std::string to_string(const BasedMap& f);

// uniform: every s_U lies in the window (HK(S) of the truncated category).
// product: singletons lie in the window, the s_U in the window scaled by k;
// then evaluation HK(S) -> K^{×S̄} is onto the full product of windows.
enum class HKMode { uniform, product };
std::string to_string(HKMode m);
HKMode parse_hk_mode(const std::string& s);

struct HKObject {
  unsigned k = 0;
  std::vector<ObjId> s;      // 2^k entries, ambient ids
  std::vector<MorId> sigma;  // 4^k entries at (U << k) | V; kNoMorphism unless U ∩ V = ∅

  MorId sig(std::uint32_t u, std::uint32_t v) const { return sigma[(std::size_t(u) << k) | v]; }
  friend bool operator==(const HKObject&, const HKObject&) = default;
};

struct HKOptions {
  HKMode mode = HKMode::uniform;
  unsigned max_k = 3;
  std::uint64_t max_objects = 2'000'000;
  // Morphisms are only materialized into a category below this count.
  std::uint64_t max_morphisms = 3'000'000;
};

struct HKAxiomReport {
  std::uint64_t objects_checked = 0, equations_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

class HKCategory {
 public:
  HKCategory(std::shared_ptr<const PermutativeWindow> window, unsigned k, const HKOptions& opts = {});

  unsigned k() const { return k_; }
  HKMode mode() const { return mode_; }
  const PermutativeWindow& window() const { return *window_; }
  std::shared_ptr<const PermutativeWindow> window_ptr() const { return window_; }
  const PermutativeWindow& ambient() const { return *ambient_; }

  std::size_t object_count() const { return objects_.size(); }
  const HKObject& object(ObjId x) const { return objects_[x]; }
  // Singleton s_i (i = 1..k) as a window object id.
  ObjId singleton(ObjId x, unsigned i) const;
  // The automorphism φ_U of s_{u1} ⊞ ... ⊞ s_{ur} (ascending) with
  // σ_{U∖max, max} = φ_U ∘ (φ_{U∖max} ⊞ id); identities for |U| <= 1.
  MorId phi(ObjId x, std::uint32_t u) const { return phi_[(std::size_t(x) << k_) | u]; }
  std::optional<ObjId> find(const HKObject& x) const;
  // Components of the category, by hom-set support.
  std::vector<std::uint32_t> components(std::size_t* count = nullptr) const;

  std::uint64_t morphism_count() const;
  std::uint64_t hom_begin(ObjId x, ObjId y) const;
  std::uint64_t hom_size(ObjId x, ObjId y) const;
  // The morphism x -> y with the given singleton components (window ids).
  std::optional<std::uint64_t> morphism_id(ObjId x, ObjId y, const std::vector<MorId>& singles) const;
  std::vector<MorId> singles(std::uint64_t f, ObjId* dom = nullptr, ObjId* cod = nullptr) const;
  // Component f_U (ambient id) of the morphism x -> y with these singletons.
  MorId component(ObjId x, ObjId y, const std::vector<MorId>& singles, std::uint32_t u) const;

  MorId to_ambient(MorId window_morphism) const { return to_ambient_[window_morphism]; }
  std::optional<MorId> to_window(MorId ambient_morphism) const;
  MorId inverse(MorId ambient_automorphism) const;

  bool has_category() const { return category_ != nullptr; }
  // WindowError when the morphism count exceeded HKOptions::max_morphisms.
  const PresentedCategory& category() const;
  std::shared_ptr<const PresentedCategory> category_ptr() const;

  // (i)-(iv) on every object, plus domains and codomains of every σ.
  HKAxiomReport check_axioms(std::size_t max_reported = 20) const;

  std::string object_label(ObjId x) const;
  nlohmann::json object_to_json(ObjId x) const;

  struct Index;

 private:
  std::shared_ptr<const PermutativeWindow> window_, ambient_;
  unsigned k_;
  HKMode mode_;
  std::vector<HKObject> objects_;
  std::vector<MorId> phi_;
  std::shared_ptr<const Index> index_;
  std::map<std::vector<std::uint32_t>, ObjId> lookup_;
  std::vector<MorId> to_ambient_;
  std::vector<MorId> inverse_;  // per ambient morphism; kNoMorphism unless an automorphism
  std::shared_ptr<const PresentedCategory> category_;
};

// Evaluation HK(S) -> K^{×S̄}: fullness (every tuple of singleton
// morphisms extends to a unique natural family), faithfulness, and essential
// surjectivity onto the product of windows. Streams over all hom-sets, so
// it does not need the category materialized.
struct EvaluationReport {
  std::uint64_t hk_objects = 0, hk_morphisms = 0;
  std::uint64_t target_objects = 0, target_hit = 0;
  std::uint64_t families_checked = 0, naturality_failures = 0;
  bool full = false, faithful = false, essentially_surjective = false;
  std::vector<std::string> notes;
  nlohmann::json to_json() const;
};
EvaluationReport check_evaluation(const HKCategory& hk, Exec exec = Exec::parallel);

// α_*(s)_U = s_{α⁻¹U}, α_*(σ)_{U,V} = σ_{α⁻¹U, α⁻¹V}.
HKObject hk_pushforward(const BasedMap& alpha, const HKObject& x);
// Singleton components of α_* f (window ids), or nullopt outside the window.
std::optional<std::vector<MorId>> hk_pushforward_morphism(const BasedMap& alpha, const HKCategory& src, ObjId x,
                                                          ObjId y, const std::vector<MorId>& singles);

// Functor HK(S) -> HK(T) induced by α (objects that leave the window are
// reported as kNoMorphism / UINT32_MAX entries).
CatFunctor hk_functor(const BasedMap& alpha, const HKCategory& src, const HKCategory& dst);

// b(K)(S): nerve of HK(S).
struct BGamma {
  std::shared_ptr<const HKCategory> hk;
  Nerve nerve;
};
BGamma b_gamma(std::shared_ptr<const PermutativeWindow> window, unsigned k, int dim, const HKOptions& opts = {});

// π₀ X(2⁺) -> π₀ X(1⁺) × π₀ X(1⁺) along the two projections, for X = b(K)
// or γ(A). Pairs are class indices of X(1⁺); for b(K) the classes are the
// degrees in ascending order.
struct SpecialnessReport {
  std::size_t source_classes = 0;
  std::vector<int> degrees;  // per class of X(1⁺)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> image;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> missing;  // pairs not hit (window boundary)
  bool well_defined = false;
  bool injective = false;
  bool interior_covered = false;  // every pair with 2|degree| <= the largest |degree|
  nlohmann::json to_json() const;
};
SpecialnessReport bgamma_specialness(std::shared_ptr<const PermutativeWindow> window, const HKOptions& opts = {});

// γ(A)(S): category of elements of (s, σ) -> ∏_i A(s_i) over HK(S) in
// uniform mode over A's window. A point is the tuple (a_1, ..., a_k),
// packed as a_1 + |A(s_1)| (a_2 + ...).
struct GammaValue {
  std::shared_ptr<const HKCategory> hk;
  std::shared_ptr<const SetValuedDiagram> diagram;
  ElementsCategory elements;
  std::vector<std::uint32_t> sizes;  // |A(m)| per window object
  std::vector<std::uint32_t> unpack(ObjId x, std::uint32_t point) const;
};
GammaValue gamma_value(const TabulatedMonoid& a, unsigned k, const HKOptions& opts = {});
TruncatedSimplicialSet gamma_of_monoid(const TabulatedMonoid& a, unsigned k, int dim);

// γ(A)(α) on categories of elements. b_j multiplies the a_v over the fiber
// V = α⁻¹(j) in the chosen order and moves the product along
// ψ: s_{v1} ⊞ ... ⊞ s_{vt} -> s_V built from σ; an empty fiber gives the
// unit. reverse_fibers picks the descending order instead of ascending.
struct StructureMap {
  CatFunctor functor;
  std::uint64_t unmapped_objects = 0;  // images outside the target window
};
StructureMap gamma_structure_map(const BasedMap& alpha, const TabulatedMonoid& a, const GammaValue& src,
                                 const GammaValue& dst, bool reverse_fibers = false);
// Nerve map of a functor, as (simplex, degeneracy mask) per nondegenerate
// simplex and level.
std::vector<std::vector<FaceRef>> nerve_map(const CatFunctor& f, const Nerve& src, const Nerve& dst, int dim);

SpecialnessReport gamma_specialness(const TabulatedMonoid& a);

// γ(A) on the simplicial circle (level m is m⁺), diagonal truncated at dim,
// together with the bar construction of π₀ of the homotopy colimit.
struct GammaCircle {
  TruncatedSimplicialSet diagonal;
  TruncatedSimplicialSet bar;
  std::vector<std::uint64_t> level_simplices;  // all diagonal simplices per level
};
GammaCircle gamma_circle(const TabulatedMonoid& a, int dim = 2);
// Normalized bar construction of a partial monoid: level m holds the tuples
// of non-units whose contiguous products are all defined.
TruncatedSimplicialSet bar_construction(const Pi0Monoid& m, int dim);

}  // namespace glj
