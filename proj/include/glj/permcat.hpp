#pragma once

// The permutative categories I (injections), Σ (bijections) and J, and
// finite windows onto them.
//
// All three share one morphism representation. For I and Σ only beta1 is
// used; beta2 is the empty injection 0 -> 0 and sigma is empty. A J-morphism
// (m1,m2) -> (n1,n2) is a pair of injections together with a bijection from
// the complement of beta1 to the complement of beta2, stored as the images of
// the complement of beta1 in ascending order.

#include "glj/catcore.hpp"
#include "glj/combinat.hpp"

#include <json.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace glj {

enum class IndexKind { I, Sigma, J };

std::string to_string(IndexKind k);
IndexKind parse_index_kind(const std::string& s);

struct KObject {
  unsigned m1 = 0, m2 = 0;
  friend auto operator<=>(const KObject&, const KObject&) = default;
  std::string to_string(IndexKind k) const;
};

struct KMorphism {
  Injection beta1, beta2;
  Injection::Table sigma;

  KObject dom() const { return {unsigned(beta1.domain_size()), unsigned(beta2.domain_size())}; }
  KObject cod() const { return {unsigned(beta1.codomain_size()), unsigned(beta2.codomain_size())}; }
  std::string to_string(IndexKind k) const;

  friend bool operator==(const KMorphism&, const KMorphism&) = default;
};

inline int degree(const KObject& x) { return int(x.m2) - int(x.m1); }

// Throws InputError when f is not a morphism of the given kind.
void check_morphism(IndexKind k, const KMorphism& f);

KMorphism k_identity(IndexKind k, KObject x);
KMorphism k_compose(IndexKind k, const KMorphism& g, const KMorphism& f);
inline KMorphism j_compose(const KMorphism& g, const KMorphism& f) { return k_compose(IndexKind::J, g, f); }

// Strict monoidal product: concatenation in each coordinate.
KObject k_product(KObject x, KObject y);
KMorphism k_product(IndexKind k, const KMorphism& f, const KMorphism& g);
// The symmetry x ⊞ y -> y ⊞ x.
KMorphism k_symmetry(IndexKind k, KObject x, KObject y);

std::uint64_t k_hom_count(IndexKind k, KObject a, KObject b);
// Position of f in the lexicographic order of (beta1, beta2, sigma) tables.
std::uint64_t k_hom_rank(IndexKind k, const KMorphism& f);
KMorphism k_hom_unrank(IndexKind k, KObject a, KObject b, std::uint64_t rank);
std::vector<KMorphism> k_homset(IndexKind k, KObject a, KObject b);
inline std::vector<KMorphism> j_homset(KObject a, KObject b) { return k_homset(IndexKind::J, a, b); }

nlohmann::json to_json(const KMorphism& f);
KMorphism kmorphism_from_json(IndexKind k, const nlohmann::json& j);

// Full subcategory of I, Σ or J on the objects with m1 <= bound1 and
// m2 <= bound2 (for I and Σ the second coordinate is always 0).
//
// Objects are numbered lexicographically in (m1, m2). Morphisms are numbered
// by (dom, cod, rank in the hom-set), so every hom-set is a contiguous range.
class PermutativeWindow {
 public:
  PermutativeWindow(IndexKind kind, unsigned bound1, unsigned bound2);
  static std::shared_ptr<const PermutativeWindow> make(IndexKind kind, unsigned bound);

  IndexKind kind() const { return kind_; }
  unsigned bound1() const { return b1_; }
  unsigned bound2() const { return b2_; }
  const PresentedCategory& category() const { return *category_; }
  std::shared_ptr<const PresentedCategory> category_ptr() const { return category_; }

  bool contains(KObject x) const { return x.m1 <= b1_ && x.m2 <= b2_ && (kind_ == IndexKind::J || x.m2 == 0); }
  ObjId object_id(KObject x) const;
  KObject object(ObjId x) const { return objects_[x]; }
  std::size_t object_count() const { return objects_.size(); }
  int degree(ObjId x) const { return glj::degree(objects_[x]); }

  MorId hom_begin(ObjId a, ObjId b) const { return hom_offset_[a * objects_.size() + b]; }
  std::uint64_t hom_size(ObjId a, ObjId b) const { return hom_offset_[a * objects_.size() + b + 1] - hom_begin(a, b); }

  MorId morphism_id(const KMorphism& f) const;
  const KMorphism& morphism(MorId f) const { return decoded_->at(f); }

  std::optional<ObjId> product(ObjId a, ObjId b) const;
  std::optional<MorId> product_morphism(MorId f, MorId g) const;
  // Symmetry a ⊞ b -> b ⊞ a; requires a ⊞ b inside the window.
  MorId symmetry(ObjId a, ObjId b) const;
  ObjId unit() const { return 0; }

 private:
  IndexKind kind_;
  unsigned b1_, b2_;
  std::vector<KObject> objects_;
  std::vector<MorId> hom_offset_;  // (a, b) row-major, plus total
  std::shared_ptr<const std::vector<KMorphism>> decoded_;
  std::shared_ptr<const PresentedCategory> category_;
};

// Δ: I -> J, m -> (m, m), α -> (α, α, id). Source window I≤bound, target J≤bound.
struct DiagonalFunctor {
  std::shared_ptr<const PermutativeWindow> source, target;
  CatFunctor functor;
};
DiagonalFunctor diagonal_functor(unsigned bound);

}  // namespace glj
