#pragma once

// Finite categories given by enumeration, set-valued diagrams on them,
// functors, and the category of elements.
//
// Morphisms are numbered globally. For every object the outgoing morphisms
// are kept in increasing id order; composition is either a table aligned to
// those lists or a callback for categories too large to tabulate.

#include "glj/parallel.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace glj {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;
inline constexpr MorId kNoMorphism = UINT32_MAX;

class PresentedCategory {
 public:
  using Composer = std::function<MorId(MorId g, MorId f)>;
  using Labeler = std::function<std::string(std::uint32_t)>;

  class Builder {
   public:
    ObjId add_object(std::string label = {});
    MorId add_morphism(ObjId dom, ObjId cod, std::string label = {});
    void set_identity(ObjId x, MorId id);
    void set_composer(Composer c) { composer_ = std::move(c); }
    // Explicit composition triples (g, f, g∘f); every composable pair once.
    void add_composite(MorId g, MorId f, MorId gf);
    void set_object_labeler(Labeler l) { object_labeler_ = std::move(l); }
    void set_morphism_labeler(Labeler l) { morphism_labeler_ = std::move(l); }
    // Reserve space when counts are known up front.
    void reserve(std::size_t objects, std::size_t morphisms);
    PresentedCategory build() &&;

   private:
    std::vector<std::string> object_labels_, morphism_labels_;
    std::vector<ObjId> dom_, cod_;
    std::vector<MorId> identity_;
    std::vector<std::array<MorId, 3>> triples_;
    Composer composer_;
    Labeler object_labeler_, morphism_labeler_;
  };

  PresentedCategory() = default;

  std::size_t object_count() const { return identity_.size(); }
  std::size_t morphism_count() const { return dom_.size(); }
  ObjId dom(MorId f) const { return dom_[f]; }
  ObjId cod(MorId f) const { return cod_[f]; }
  MorId identity(ObjId x) const { return identity_[x]; }
  bool is_identity(MorId f) const { return identity_[dom_[f]] == f; }

  // Morphisms with domain x, increasing ids.
  std::span<const MorId> out(ObjId x) const {
    return {out_list_.data() + out_offset_[x], out_offset_[x + 1] - out_offset_[x]};
  }
  std::span<const MorId> in(ObjId x) const {
    return {in_list_.data() + in_offset_[x], in_offset_[x + 1] - in_offset_[x]};
  }
  // Position of f in out(dom f).
  std::uint32_t out_position(MorId f) const { return out_pos_[f]; }

  // g∘f; requires cod f == dom g. Returns kNoMorphism only when the
  // underlying data is broken (validate reports it).
  MorId compose(MorId g, MorId f) const;
  std::uint64_t composable_pairs() const;
  bool has_table() const { return !table_.empty(); }
  // Tabulate composition (the callback stays available for spot checks).
  void materialize(Exec exec = Exec::parallel);

  std::string object_label(ObjId x) const;
  std::string morphism_label(MorId f) const;

  // Full subcategory on the given objects (kept in the given order).
  // parent_morphism maps new morphism ids back.
  struct Sub;
  Sub full_subcategory(const std::vector<ObjId>& objects) const;

 private:
  friend class Builder;
  void index();

  std::vector<ObjId> dom_, cod_;
  std::vector<MorId> identity_;
  std::vector<std::size_t> out_offset_, in_offset_;
  std::vector<MorId> out_list_, in_list_;
  std::vector<std::uint32_t> out_pos_;
  // table_[table_offset_[f] + out_position(g)] = g∘f
  std::vector<std::uint64_t> table_offset_;
  std::vector<MorId> table_;
  Composer composer_;
  std::shared_ptr<const std::vector<std::string>> object_labels_, morphism_labels_;
  Labeler object_labeler_, morphism_labeler_;
};

struct PresentedCategory::Sub {
  PresentedCategory category;
  std::vector<ObjId> parent_object;
  std::vector<MorId> parent_morphism;
};

// Product category; object (x, y) has id x * D.object_count() + y.
PresentedCategory product(const PresentedCategory& c, const PresentedCategory& d);

struct ValidateOptions {
  std::uint64_t exhaustive_pair_limit = 100000;
  std::uint64_t sample_triples = 10000;
  std::uint64_t seed = 1;
  bool force_sampling = false;
  std::size_t max_reported = 20;
};

struct ValidationReport {
  bool exhaustive = true;
  std::uint64_t triples_checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<std::string> violations;  // first max_reported messages
  bool ok() const { return violation_count == 0; }
};

// Checks dom/cod of composites, identity laws and associativity.
ValidationReport validate(const PresentedCategory& c, const ValidateOptions& opts = {});

// Set-valued functor on a category; points of value(x) are 0..size-1.
class SetValuedDiagram {
 public:
  SetValuedDiagram(std::shared_ptr<const PresentedCategory> base, std::vector<std::uint32_t> sizes,
                   std::vector<std::vector<std::uint32_t>> action);
  const PresentedCategory& base() const { return *base_; }
  std::shared_ptr<const PresentedCategory> base_ptr() const { return base_; }
  std::uint32_t size(ObjId x) const { return sizes_[x]; }
  std::uint32_t act(MorId f, std::uint32_t point) const { return action_[f][point]; }
  const std::vector<std::uint32_t>& action(MorId f) const { return action_[f]; }

  // Violations of functoriality (ranges, identities, composites), capped.
  std::vector<std::string> check(std::size_t max_reported = 20) const;

 private:
  std::shared_ptr<const PresentedCategory> base_;
  std::vector<std::uint32_t> sizes_;
  std::vector<std::vector<std::uint32_t>> action_;
};

// Grothendieck construction. Element object (x, p) has id
// object_offset[x] + p; the element morphism over f: x -> y starting at
// (x, p) has id morphism_offset[(x, p)] + out_position(f).
struct ElementsCategory {
  PresentedCategory category;
  std::shared_ptr<const PresentedCategory> base;
  std::vector<std::uint64_t> object_offset;      // per base object, plus total
  std::vector<ObjId> base_object;                // per element object
  std::vector<std::uint32_t> point;              // per element object
  std::shared_ptr<const std::vector<std::uint64_t>> morphism_offset;  // per element object
  std::shared_ptr<const std::vector<MorId>> base_morphism;            // per element morphism

  ObjId element(ObjId x, std::uint32_t p) const { return static_cast<ObjId>(object_offset[x] + p); }
  MorId lift(MorId f, std::uint32_t p) const {
    return static_cast<MorId>((*morphism_offset)[element(base->dom(f), p)] + base->out_position(f));
  }
};

// verify: run SetValuedDiagram::check first (exhaustive over composable pairs).
ElementsCategory category_of_elements(const SetValuedDiagram& x, bool verify = true);

// A functor between presented categories given by explicit maps.
struct CatFunctor {
  const PresentedCategory* source = nullptr;
  const PresentedCategory* target = nullptr;
  std::vector<ObjId> object_map;
  std::vector<MorId> morphism_map;
  // Preservation of dom/cod, identities and composites (sampled above the
  // validate threshold).
  std::vector<std::string> check(const ValidateOptions& opts = {}) const;
};

// Union-find over objects along morphisms; component index per object,
// numbered in order of first appearance.
std::vector<std::uint32_t> object_components(const PresentedCategory& c, std::size_t* count = nullptr);

// JSON: {"schema": "glj.category/1", "objects": [...], "morphisms": [[dom, cod, label]...],
// "identities": [...], "composition": [[g, f, gf]...]}
nlohmann::json to_json(const PresentedCategory& c);
PresentedCategory category_from_json(const nlohmann::json& j);

}  // namespace glj
