#include "glj/catcore.hpp"

#include "detail/union_find.hpp"
#include "glj/errors.hpp"
#include "kernels/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace glj {

namespace {

using detail::UnionFind;

std::string pair_text(MorId g, MorId f) {
  return "(" + std::to_string(g) + ", " + std::to_string(f) + ")";
}

class Reporter {
 public:
  Reporter(std::vector<std::string>& out, std::uint64_t& count, std::size_t cap)
      : out_(out), count_(count), cap_(cap) {}
  void operator()(const std::string& msg) {
    ++count_;
    if (out_.size() < cap_) out_.push_back(msg);
  }

 private:
  std::vector<std::string>& out_;
  std::uint64_t& count_;
  std::size_t cap_;
};

}  // namespace

// ---------------------------------------------------------------- Builder

ObjId PresentedCategory::Builder::add_object(std::string label) {
  object_labels_.push_back(std::move(label));
  identity_.push_back(kNoMorphism);
  return static_cast<ObjId>(identity_.size() - 1);
}

MorId PresentedCategory::Builder::add_morphism(ObjId dom, ObjId cod, std::string label) {
  require_input(dom < identity_.size() && cod < identity_.size(), "morphism endpoint out of range");
  require_input(dom_.size() < kNoMorphism, "too many morphisms");
  dom_.push_back(dom);
  cod_.push_back(cod);
  morphism_labels_.push_back(std::move(label));
  return static_cast<MorId>(dom_.size() - 1);
}

void PresentedCategory::Builder::set_identity(ObjId x, MorId id) {
  require_input(x < identity_.size() && id < dom_.size(), "identity out of range");
  identity_[x] = id;
}

void PresentedCategory::Builder::add_composite(MorId g, MorId f, MorId gf) {
  triples_.push_back({g, f, gf});
}

void PresentedCategory::Builder::reserve(std::size_t objects, std::size_t morphisms) {
  identity_.reserve(objects);
  object_labels_.reserve(objects);
  dom_.reserve(morphisms);
  cod_.reserve(morphisms);
  morphism_labels_.reserve(morphisms);
}

PresentedCategory PresentedCategory::Builder::build() && {
  PresentedCategory c;
  for (std::size_t x = 0; x < identity_.size(); ++x) {
    require_input(identity_[x] != kNoMorphism, "object " + std::to_string(x) + " has no identity");
    require_input(dom_[identity_[x]] == x && cod_[identity_[x]] == x,
                  "identity of object " + std::to_string(x) + " is not an endomorphism");
  }
  c.dom_ = std::move(dom_);
  c.cod_ = std::move(cod_);
  c.identity_ = std::move(identity_);
  c.index();
  auto has_text = [](const std::vector<std::string>& v) {
    return std::any_of(v.begin(), v.end(), [](const std::string& s) { return !s.empty(); });
  };
  if (has_text(object_labels_))
    c.object_labels_ = std::make_shared<const std::vector<std::string>>(std::move(object_labels_));
  if (has_text(morphism_labels_))
    c.morphism_labels_ = std::make_shared<const std::vector<std::string>>(std::move(morphism_labels_));
  c.object_labeler_ = std::move(object_labeler_);
  c.morphism_labeler_ = std::move(morphism_labeler_);

  if (!triples_.empty() || !composer_) {
    require_input(!composer_, "category: both a composer and composition triples given");
    c.table_offset_.resize(c.morphism_count() + 1, 0);
    for (MorId f = 0; f < c.morphism_count(); ++f)
      c.table_offset_[f + 1] = c.table_offset_[f] + c.out(c.cod(f)).size();
    c.table_.assign(c.table_offset_.back(), kNoMorphism);
    for (const auto& [g, f, gf] : triples_) {
      require_input(g < c.morphism_count() && f < c.morphism_count() && gf < c.morphism_count(),
                    "composition triple out of range");
      require_input(c.cod(f) == c.dom(g), "composition triple " + pair_text(g, f) + " not composable");
      MorId& slot = c.table_[c.table_offset_[f] + c.out_pos_[g]];
      require_input(slot == kNoMorphism, "composition triple " + pair_text(g, f) + " given twice");
      slot = gf;
    }
  } else {
    c.composer_ = std::move(composer_);
  }
  return c;
}

// ------------------------------------------------------ PresentedCategory

void PresentedCategory::index() {
  const std::size_t n = identity_.size(), m = dom_.size();
  out_offset_.assign(n + 1, 0);
  in_offset_.assign(n + 1, 0);
  for (MorId f = 0; f < m; ++f) {
    ++out_offset_[dom_[f] + 1];
    ++in_offset_[cod_[f] + 1];
  }
  std::partial_sum(out_offset_.begin(), out_offset_.end(), out_offset_.begin());
  std::partial_sum(in_offset_.begin(), in_offset_.end(), in_offset_.begin());
  out_list_.resize(m);
  in_list_.resize(m);
  out_pos_.resize(m);
  std::vector<std::size_t> fo(out_offset_.begin(), out_offset_.end() - 1),
      fi(in_offset_.begin(), in_offset_.end() - 1);
  for (MorId f = 0; f < m; ++f) {
    out_pos_[f] = static_cast<std::uint32_t>(fo[dom_[f]] - out_offset_[dom_[f]]);
    out_list_[fo[dom_[f]]++] = f;
    in_list_[fi[cod_[f]]++] = f;
  }
}

MorId PresentedCategory::compose(MorId g, MorId f) const {
  if (!table_.empty()) return table_[table_offset_[f] + out_pos_[g]];
  return composer_(g, f);
}

std::uint64_t PresentedCategory::composable_pairs() const {
  std::uint64_t n = 0;
  for (MorId f = 0; f < morphism_count(); ++f) n += out(cod(f)).size();
  return n;
}

void PresentedCategory::materialize(Exec exec) {
  if (!table_.empty()) return;
  table_offset_.assign(morphism_count() + 1, 0);
  for (MorId f = 0; f < morphism_count(); ++f)
    table_offset_[f + 1] = table_offset_[f] + out(cod(f)).size();
  std::vector<MorId> table(table_offset_.back());
  kernels::fill_composition_table(*this, table_offset_, table, exec);
  table_ = std::move(table);
}

std::string PresentedCategory::object_label(ObjId x) const {
  if (object_labels_) return (*object_labels_)[x];
  if (object_labeler_) return object_labeler_(x);
  return std::to_string(x);
}

std::string PresentedCategory::morphism_label(MorId f) const {
  if (morphism_labels_) return (*morphism_labels_)[f];
  if (morphism_labeler_) return morphism_labeler_(f);
  return std::to_string(f);
}

PresentedCategory::Sub PresentedCategory::full_subcategory(const std::vector<ObjId>& objects) const {
  std::vector<std::int64_t> local(object_count(), -1);
  for (std::size_t i = 0; i < objects.size(); ++i) {
    require_input(objects[i] < object_count() && local[objects[i]] < 0,
                  "full_subcategory: bad or repeated object");
    local[objects[i]] = static_cast<std::int64_t>(i);
  }
  Builder b;
  Sub sub;
  sub.parent_object = objects;
  for (std::size_t i = 0; i < objects.size(); ++i) b.add_object();
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (MorId f : out(objects[i])) {
      if (local[cod(f)] < 0) continue;
      MorId nf = b.add_morphism(static_cast<ObjId>(i), static_cast<ObjId>(local[cod(f)]));
      sub.parent_morphism.push_back(f);
      if (is_identity(f)) b.set_identity(static_cast<ObjId>(i), nf);
    }
  auto parent = std::make_shared<std::vector<MorId>>(sub.parent_morphism);
  auto back = std::make_shared<std::vector<MorId>>(morphism_count(), kNoMorphism);
  for (MorId i = 0; i < parent->size(); ++i) (*back)[(*parent)[i]] = i;
  // The composer refers to this category; callers keep the parent alive.
  const PresentedCategory* self = this;
  b.set_composer([self, parent, back](MorId g, MorId f) {
    return (*back)[self->compose((*parent)[g], (*parent)[f])];
  });
  auto olabels = std::make_shared<std::vector<ObjId>>(objects);
  b.set_object_labeler([self, olabels](std::uint32_t x) { return self->object_label((*olabels)[x]); });
  b.set_morphism_labeler([self, parent](std::uint32_t f) { return self->morphism_label((*parent)[f]); });
  sub.category = std::move(b).build();
  if (has_table()) sub.category.materialize(Exec::serial);
  return sub;
}

PresentedCategory product(const PresentedCategory& c, const PresentedCategory& d) {
  PresentedCategory::Builder b;
  const std::size_t nd = d.object_count(), md = d.morphism_count();
  b.reserve(c.object_count() * nd, c.morphism_count() * md);
  for (std::size_t i = 0; i < c.object_count() * nd; ++i) b.add_object();
  for (MorId f = 0; f < c.morphism_count(); ++f)
    for (MorId g = 0; g < md; ++g)
      b.add_morphism(static_cast<ObjId>(c.dom(f) * nd + d.dom(g)), static_cast<ObjId>(c.cod(f) * nd + d.cod(g)));
  for (ObjId x = 0; x < c.object_count(); ++x)
    for (ObjId y = 0; y < nd; ++y)
      b.set_identity(static_cast<ObjId>(x * nd + y), static_cast<MorId>(c.identity(x) * md + d.identity(y)));
  auto pc = std::make_shared<const PresentedCategory>(c);
  auto pd = std::make_shared<const PresentedCategory>(d);
  b.set_composer([pc, pd, md](MorId g, MorId f) {
    return static_cast<MorId>(pc->compose(g / md, f / md) * md + pd->compose(g % md, f % md));
  });
  return std::move(b).build();
}

// ------------------------------------------------------------- validation

ValidationReport validate(const PresentedCategory& c, const ValidateOptions& opts) {
  ValidationReport rep;
  Reporter report(rep.violations, rep.violation_count, opts.max_reported);
  const std::size_t m = c.morphism_count();

  for (ObjId x = 0; x < c.object_count(); ++x) {
    const MorId id = c.identity(x);
    if (c.dom(id) != x || c.cod(id) != x) report("identity of object " + std::to_string(x) + " misplaced");
  }
  for (MorId f = 0; f < m; ++f) {
    if (c.compose(f, c.identity(c.dom(f))) != f)
      report("right identity law fails for morphism " + std::to_string(f));
    if (c.compose(c.identity(c.cod(f)), f) != f)
      report("left identity law fails for morphism " + std::to_string(f));
  }

  auto check_pair = [&](MorId g, MorId f) -> MorId {
    const MorId gf = c.compose(g, f);
    if (gf >= m) {
      report("composite " + pair_text(g, f) + " undefined");
      return kNoMorphism;
    }
    if (c.dom(gf) != c.dom(f) || c.cod(gf) != c.cod(g)) {
      report("composite " + pair_text(g, f) + " has wrong endpoints");
      return kNoMorphism;
    }
    return gf;
  };
  auto check_triple = [&](MorId h, MorId g, MorId f) {
    ++rep.triples_checked;
    const MorId gf = check_pair(g, f), hg = check_pair(h, g);
    if (gf == kNoMorphism || hg == kNoMorphism) return;
    const MorId a = check_pair(h, gf), b = check_pair(hg, f);
    if (a != b)
      report("associativity fails at (h, g, f) = (" + std::to_string(h) + ", " + std::to_string(g) +
             ", " + std::to_string(f) + ")");
  };

  const std::uint64_t pairs = c.composable_pairs();
  rep.exhaustive = !opts.force_sampling && pairs <= opts.exhaustive_pair_limit;
  if (rep.exhaustive) {
    for (MorId f = 0; f < m; ++f)
      for (MorId g : c.out(c.cod(f)))
        for (MorId h : c.out(c.cod(g))) check_triple(h, g, f);
  } else if (m > 0) {
    std::mt19937_64 gen(opts.seed);
    auto pick = [&](std::span<const MorId> s) {
      return s[std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(gen)];
    };
    std::uniform_int_distribution<MorId> any(0, static_cast<MorId>(m - 1));
    for (std::uint64_t t = 0; t < opts.sample_triples; ++t) {
      const MorId f = any(gen);
      const MorId g = pick(c.out(c.cod(f)));
      const MorId h = pick(c.out(c.cod(g)));
      check_triple(h, g, f);
    }
  }
  return rep;
}

// ------------------------------------------------------------- diagrams

SetValuedDiagram::SetValuedDiagram(std::shared_ptr<const PresentedCategory> base,
                                   std::vector<std::uint32_t> sizes,
                                   std::vector<std::vector<std::uint32_t>> action)
    : base_(std::move(base)), sizes_(std::move(sizes)), action_(std::move(action)) {
  require_input(sizes_.size() == base_->object_count(), "diagram: one value set per object required");
  require_input(action_.size() == base_->morphism_count(), "diagram: one action per morphism required");
  for (MorId f = 0; f < action_.size(); ++f) {
    if (action_[f].size() != sizes_[base_->dom(f)])
      throw InputError("diagram: action of morphism " + std::to_string(f) + " has wrong length");
    for (auto v : action_[f])
      if (v >= sizes_[base_->cod(f)])
        throw InputError("diagram: action of morphism " + std::to_string(f) + " leaves its target");
  }
}

std::vector<std::string> SetValuedDiagram::check(std::size_t max_reported) const {
  std::vector<std::string> out;
  std::uint64_t count = 0;
  Reporter report(out, count, max_reported);
  const auto& c = *base_;
  for (ObjId x = 0; x < c.object_count(); ++x) {
    const auto& a = action_[c.identity(x)];
    for (std::uint32_t p = 0; p < sizes_[x]; ++p)
      if (a[p] != p) {
        report("identity of object " + std::to_string(x) + " acts nontrivially");
        break;
      }
  }
  for (MorId f = 0; f < c.morphism_count(); ++f)
    for (MorId g : c.out(c.cod(f))) {
      const auto& gf = action_[c.compose(g, f)];
      for (std::uint32_t p = 0; p < sizes_[c.dom(f)]; ++p)
        if (gf[p] != action_[g][action_[f][p]]) {
          report("action not functorial on " + pair_text(g, f));
          break;
        }
    }
  return out;
}

ElementsCategory category_of_elements(const SetValuedDiagram& x, bool verify) {
  const auto problems = verify ? x.check(1) : std::vector<std::string>{};
  require_input(problems.empty(), "category_of_elements: diagram is not a functor: " +
                                      (problems.empty() ? std::string() : problems.front()));
  ElementsCategory el;
  el.base = x.base_ptr();
  const PresentedCategory& c = *el.base;
  const std::size_t n = c.object_count();
  el.object_offset.assign(n + 1, 0);
  for (ObjId k = 0; k < n; ++k) el.object_offset[k + 1] = el.object_offset[k] + x.size(k);
  const std::uint64_t nobj = el.object_offset.back();
  std::uint64_t nmor = 0;
  for (ObjId k = 0; k < n; ++k) nmor += std::uint64_t(x.size(k)) * c.out(k).size();
  if (nobj >= kNoMorphism || nmor >= kNoMorphism)
    throw WindowError("category_of_elements: too large (" + std::to_string(nmor) + " morphisms)");

  auto moff = std::make_shared<std::vector<std::uint64_t>>(nobj + 1, 0);
  auto basem = std::make_shared<std::vector<MorId>>();
  basem->reserve(nmor);
  el.base_object.resize(nobj);
  el.point.resize(nobj);
  PresentedCategory::Builder b;
  b.reserve(nobj, nmor);
  for (ObjId k = 0; k < n; ++k)
    for (std::uint32_t p = 0; p < x.size(k); ++p) {
      const ObjId e = b.add_object();
      el.base_object[e] = k;
      el.point[e] = p;
    }
  for (ObjId e = 0; e < nobj; ++e) {
    const ObjId k = el.base_object[e];
    const std::uint32_t p = el.point[e];
    (*moff)[e] = basem->size();
    for (MorId f : c.out(k)) {
      const ObjId target = static_cast<ObjId>(el.object_offset[c.cod(f)] + x.act(f, p));
      const MorId ef = b.add_morphism(e, target);
      basem->push_back(f);
      if (c.is_identity(f)) b.set_identity(e, ef);
    }
  }
  (*moff)[nobj] = basem->size();
  el.morphism_offset = moff;
  el.base_morphism = basem;

  auto base = el.base;
  b.set_composer([base, moff, basem](MorId g, MorId f) -> MorId {
    // (g, q) ∘ (f, p) = (g∘f, p); dom of f's element is recovered from the
    // offsets by binary search.
    const MorId h = base->compose((*basem)[g], (*basem)[f]);
    const auto it = std::upper_bound(moff->begin(), moff->end(), std::uint64_t(f)) - 1;
    return static_cast<MorId>(*it + base->out_position(h));
  });
  auto bo = std::make_shared<std::vector<ObjId>>(el.base_object);
  auto pt = std::make_shared<std::vector<std::uint32_t>>(el.point);
  b.set_object_labeler([base, bo, pt](std::uint32_t e) {
    return "(" + base->object_label((*bo)[e]) + ", " + std::to_string((*pt)[e]) + ")";
  });
  b.set_morphism_labeler([base, basem](std::uint32_t f) { return base->morphism_label((*basem)[f]); });
  el.category = std::move(b).build();
  return el;
}

// ---------------------------------------------------------------- functors

std::vector<std::string> CatFunctor::check(const ValidateOptions& opts) const {
  std::vector<std::string> out;
  std::uint64_t count = 0;
  Reporter report(out, count, opts.max_reported);
  const auto& s = *source;
  const auto& t = *target;
  if (object_map.size() != s.object_count() || morphism_map.size() != s.morphism_count()) {
    report("functor: map sizes do not match the source");
    return out;
  }
  for (ObjId x = 0; x < s.object_count(); ++x)
    if (object_map[x] >= t.object_count()) report("functor: object " + std::to_string(x) + " unmapped");
  for (MorId f = 0; f < s.morphism_count(); ++f) {
    const MorId g = morphism_map[f];
    if (g >= t.morphism_count()) {
      report("functor: morphism " + std::to_string(f) + " unmapped");
      continue;
    }
    if (t.dom(g) != object_map[s.dom(f)] || t.cod(g) != object_map[s.cod(f)])
      report("functor: morphism " + std::to_string(f) + " endpoints not preserved");
  }
  if (!out.empty()) return out;
  for (ObjId x = 0; x < s.object_count(); ++x)
    if (morphism_map[s.identity(x)] != t.identity(object_map[x]))
      report("functor: identity of object " + std::to_string(x) + " not preserved");
  auto check_pair = [&](MorId g, MorId f) {
    if (morphism_map[s.compose(g, f)] != t.compose(morphism_map[g], morphism_map[f]))
      report("functor: composite " + pair_text(g, f) + " not preserved");
  };
  if (!opts.force_sampling && s.composable_pairs() <= opts.exhaustive_pair_limit) {
    for (MorId f = 0; f < s.morphism_count(); ++f)
      for (MorId g : s.out(s.cod(f))) check_pair(g, f);
  } else if (s.morphism_count() > 0) {
    std::mt19937_64 gen(opts.seed);
    std::uniform_int_distribution<MorId> any(0, static_cast<MorId>(s.morphism_count() - 1));
    for (std::uint64_t i = 0; i < opts.sample_triples; ++i) {
      const MorId f = any(gen);
      const auto o = s.out(s.cod(f));
      check_pair(o[std::uniform_int_distribution<std::size_t>(0, o.size() - 1)(gen)], f);
    }
  }
  return out;
}

std::vector<std::uint32_t> object_components(const PresentedCategory& c, std::size_t* count) {
  UnionFind uf(c.object_count());
  for (MorId f = 0; f < c.morphism_count(); ++f) uf.unite(c.dom(f), c.cod(f));
  std::vector<std::uint32_t> label(c.object_count()), root_label(c.object_count(), UINT32_MAX);
  std::uint32_t next = 0;
  for (ObjId x = 0; x < c.object_count(); ++x) {
    auto& r = root_label[uf.find(x)];
    if (r == UINT32_MAX) r = next++;
    label[x] = r;
  }
  if (count) *count = next;
  return label;
}

// -------------------------------------------------------------------- JSON

nlohmann::json to_json(const PresentedCategory& c) {
  nlohmann::json j;
  j["schema"] = "glj.category/1";
  auto& objs = j["objects"] = nlohmann::json::array();
  for (ObjId x = 0; x < c.object_count(); ++x) objs.push_back(c.object_label(x));
  auto& mors = j["morphisms"] = nlohmann::json::array();
  for (MorId f = 0; f < c.morphism_count(); ++f) mors.push_back({c.dom(f), c.cod(f), c.morphism_label(f)});
  auto& ids = j["identities"] = nlohmann::json::array();
  for (ObjId x = 0; x < c.object_count(); ++x) ids.push_back(c.identity(x));
  auto& comp = j["composition"] = nlohmann::json::array();
  for (MorId f = 0; f < c.morphism_count(); ++f)
    for (MorId g : c.out(c.cod(f))) comp.push_back({g, f, c.compose(g, f)});
  return j;
}

PresentedCategory category_from_json(const nlohmann::json& j) {
  try {
    require_input(j.value("schema", "") == "glj.category/1", "category JSON: expected schema glj.category/1");
    PresentedCategory::Builder b;
    for (const auto& o : j.at("objects")) b.add_object(o.get<std::string>());
    for (const auto& m : j.at("morphisms"))
      b.add_morphism(m.at(0).get<ObjId>(), m.at(1).get<ObjId>(), m.at(2).get<std::string>());
    const auto& ids = j.at("identities");
    for (std::size_t x = 0; x < ids.size(); ++x) b.set_identity(static_cast<ObjId>(x), ids[x].get<MorId>());
    for (const auto& t : j.at("composition"))
      b.add_composite(t.at(0).get<MorId>(), t.at(1).get<MorId>(), t.at(2).get<MorId>());
    return std::move(b).build();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("category JSON: ") + e.what());
  }
}

}  // namespace glj
