#include "glj/gammacat.hpp"

#include "detail/union_find.hpp"
#include "glj/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace glj {

namespace {

std::vector<unsigned> members(std::uint32_t u) {
  std::vector<unsigned> out;
  for (unsigned i = 0; u >> i; ++i)
    if (u >> i & 1) out.push_back(i + 1);
  return out;
}

std::uint32_t bit(unsigned i) { return 1u << (i - 1); }

}  // namespace

// ---- based sets ----

std::uint32_t BasedMap::preimage(std::uint32_t mask) const {
  std::uint32_t out = 0;
  for (unsigned i = 1; i <= source; ++i)
    if (values[i] && (mask & bit(values[i]))) out |= bit(i);
  return out;
}

void BasedMap::check() const {
  require_input(values.size() == source + 1, "based map " + std::to_string(source) + "+ -> " +
                                                 std::to_string(target) + "+ needs " + std::to_string(source + 1) +
                                                 " values");
  require_input(values[0] == 0, "based map must send 0 to 0");
  for (unsigned v : values) require_input(v <= target, "based map value " + std::to_string(v) + " out of range");
}

BasedMap BasedMap::identity(unsigned k) {
  BasedMap f{k, k, std::vector<unsigned>(k + 1)};
  std::iota(f.values.begin(), f.values.end(), 0u);
  return f;
}

BasedMap BasedMap::fold(unsigned k) {
  BasedMap f{k, 1, std::vector<unsigned>(k + 1, 1)};
  f.values[0] = 0;
  return f;
}

BasedMap BasedMap::projection(unsigned k, unsigned j) {
  require_input(j >= 1 && j <= k, "projection index out of range");
  BasedMap f{k, 1, std::vector<unsigned>(k + 1, 0)};
  f.values[j] = 1;
  return f;
}

BasedMap compose(const BasedMap& g, const BasedMap& f) {
  require_input(f.target == g.source, "based maps are not composable");
  BasedMap h{f.source, g.target, std::vector<unsigned>(f.source + 1)};
  for (unsigned i = 0; i <= f.source; ++i) h.values[i] = g(f(i));
  return h;
}

std::string to_string(const BasedMap& f) {
  std::ostringstream os;
  os << f.source << "+ -> " << f.target << "+ [";
  for (std::size_t i = 0; i < f.values.size(); ++i) os << (i ? "," : "") << f.values[i];
  os << "]";
  return os.str();
}

std::string to_string(HKMode m) { return m == HKMode::uniform ? "uniform" : "product"; }

HKMode parse_hk_mode(const std::string& s) {
  if (s == "uniform") return HKMode::uniform;
  if (s == "product") return HKMode::product;
  throw InputError("unknown HK mode '" + s + "' (expected uniform or product)");
}

// ---- HK(S) ----

struct HKCategory::Index {
  std::shared_ptr<const PermutativeWindow> window;
  unsigned k = 0;
  std::size_t n = 0;
  std::vector<ObjId> singletons;          // n * k
  std::vector<std::uint64_t> hom_offset;  // n * n + 1

  std::uint64_t hom_size(ObjId x, ObjId y) const {
    const std::size_t p = std::size_t(x) * n + y;
    return hom_offset[p + 1] - hom_offset[p];
  }

  std::optional<std::uint64_t> id(ObjId x, ObjId y, const std::vector<MorId>& singles) const {
    const auto& c = window->category();
    std::uint64_t r = 0;
    for (unsigned i = 0; i < k; ++i) {
      const ObjId a = singletons[std::size_t(x) * k + i], b = singletons[std::size_t(y) * k + i];
      const MorId f = singles[i];
      if (f >= c.morphism_count() || c.dom(f) != a || c.cod(f) != b) return std::nullopt;
      r = r * window->hom_size(a, b) + (f - window->hom_begin(a, b));
    }
    return hom_offset[std::size_t(x) * n + y] + r;
  }

  std::vector<MorId> decode(std::uint64_t f, ObjId* dom, ObjId* cod) const {
    require_input(f < hom_offset.back(), "HK morphism id out of range");
    const auto p = std::size_t(std::upper_bound(hom_offset.begin(), hom_offset.end(), f) - hom_offset.begin()) - 1;
    const ObjId x = ObjId(p / n), y = ObjId(p % n);
    std::uint64_t r = f - hom_offset[p];
    std::vector<MorId> out(k);
    for (unsigned i = k; i-- > 0;) {
      const ObjId a = singletons[std::size_t(x) * k + i], b = singletons[std::size_t(y) * k + i];
      const auto h = window->hom_size(a, b);
      out[i] = MorId(window->hom_begin(a, b) + r % h);
      r /= h;
    }
    if (dom) *dom = x;
    if (cod) *cod = y;
    return out;
  }
};

namespace {

// π_{U,V}: s_U ⊞ s_V -> s_{U∪V}, each side in ascending block order.
KMorphism block_shuffle(const std::vector<KObject>& blocks, std::uint32_t u, std::uint32_t v) {
  std::vector<unsigned> off1(blocks.size() + 1), off2(blocks.size() + 1);
  unsigned t1 = 0, t2 = 0;
  for (unsigned i : members(u | v)) {
    off1[i] = t1;
    off2[i] = t2;
    t1 += blocks[i - 1].m1;
    t2 += blocks[i - 1].m2;
  }
  std::vector<unsigned> b1, b2;
  for (std::uint32_t part : {u, v})
    for (unsigned i : members(part)) {
      for (unsigned t = 1; t <= blocks[i - 1].m1; ++t) b1.push_back(off1[i] + t);
      for (unsigned t = 1; t <= blocks[i - 1].m2; ++t) b2.push_back(off2[i] + t);
    }
  return {Injection(t1, b1), Injection(t2, b2), {}};
}

}  // namespace

HKCategory::HKCategory(std::shared_ptr<const PermutativeWindow> window, unsigned k, const HKOptions& opts)
    : window_(std::move(window)), k_(k), mode_(opts.mode) {
  require_input(k <= opts.max_k && k <= 4, "HK(S) is enumerated for |S̄| <= " + std::to_string(opts.max_k) +
                                                "; got |S̄| = " + std::to_string(k));
  if (mode_ == HKMode::product && k > 1)
    ambient_ = std::make_shared<const PermutativeWindow>(window_->kind(), k * window_->bound1(), k * window_->bound2());
  else
    ambient_ = window_;
  const auto& ac = ambient_->category();
  const auto& wc = window_->category();

  to_ambient_.resize(wc.morphism_count());
  for (MorId f = 0; f < to_ambient_.size(); ++f)
    to_ambient_[f] = ambient_ == window_ ? f : ambient_->morphism_id(window_->morphism(f));
  inverse_.assign(ac.morphism_count(), kNoMorphism);
  for (ObjId x = 0; x < ambient_->object_count(); ++x)
    for (std::uint64_t r = 0; r < ambient_->hom_size(x, x); ++r) {
      const MorId f = MorId(ambient_->hom_begin(x, x) + r);
      const auto& m = ambient_->morphism(f);
      inverse_[f] = ambient_->morphism_id({glj::inverse(m.beta1), glj::inverse(m.beta2), {}});
    }

  const std::uint32_t full = (1u << k) - 1, nsub = 1u << k;
  const std::size_t nw = window_->object_count();
  std::uint64_t tuples = 1;
  for (unsigned i = 0; i < k; ++i) tuples *= nw;

  auto idx = std::make_shared<Index>();
  idx->window = window_;
  idx->k = k;
  std::vector<ObjId> tuple(k);
  std::vector<KObject> blocks(k);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    std::uint64_t r = t;
    for (unsigned i = k; i-- > 0;) {
      tuple[i] = ObjId(r % nw);
      r /= nw;
      blocks[i] = window_->object(tuple[i]);
    }
    std::vector<KObject> sums(nsub);
    for (std::uint32_t u = 1; u < nsub; ++u) {
      const unsigned low = std::countr_zero(u);
      sums[u] = k_product(sums[u & (u - 1)], blocks[low]);
    }
    if (!ambient_->contains(sums[full])) continue;
    std::vector<ObjId> s(nsub);
    for (std::uint32_t u = 0; u < nsub; ++u) s[u] = ambient_->object_id(sums[u]);
    std::vector<MorId> pi(std::size_t(nsub) * nsub, kNoMorphism);
    for (std::uint32_t u = 1; u < nsub; ++u)
      for (std::uint32_t v = 1; v < nsub; ++v)
        if (!(u & v)) pi[(u << k) | v] = ambient_->morphism_id(block_shuffle(blocks, u, v));

    std::vector<std::uint32_t> big;
    std::uint64_t choices = 1;
    for (std::uint32_t u = 1; u < nsub; ++u)
      if (std::popcount(u) >= 2) {
        big.push_back(u);
        choices *= ambient_->hom_size(s[u], s[u]);
      }
    if (objects_.size() + choices > opts.max_objects)
      throw WindowError("HK(" + std::to_string(k) + "+) over " + to_string(window_->kind()) + "<=(" +
                        std::to_string(window_->bound1()) + "," + std::to_string(window_->bound2()) +
                        ") has more than " + std::to_string(opts.max_objects) + " objects");

    for (std::uint64_t c = 0; c < choices; ++c) {
      std::vector<MorId> phi(nsub);
      for (std::uint32_t u = 0; u < nsub; ++u) phi[u] = ac.identity(s[u]);
      std::uint64_t rem = c;
      for (std::size_t b = big.size(); b-- > 0;) {
        const auto h = ambient_->hom_size(s[big[b]], s[big[b]]);
        phi[big[b]] = MorId(ambient_->hom_begin(s[big[b]], s[big[b]]) + rem % h);
        rem /= h;
      }
      HKObject x;
      x.k = k;
      x.s = s;
      x.sigma.assign(std::size_t(nsub) * nsub, kNoMorphism);
      for (std::uint32_t u = 0; u < nsub; ++u)
        for (std::uint32_t v = 0; v < nsub; ++v) {
          if (u & v) continue;
          MorId& out = x.sigma[(u << k) | v];
          if (!u || !v) {
            out = ac.identity(s[u | v]);
            continue;
          }
          const auto inv = ambient_->product_morphism(inverse_[phi[u]], inverse_[phi[v]]);
          require_internal(inv.has_value(), "HK: s_U ⊞ s_V left the ambient window");
          out = ac.compose(phi[u | v], ac.compose(pi[(u << k) | v], *inv));
        }
      const ObjId id = ObjId(objects_.size());
      std::vector<std::uint32_t> key(x.s.begin(), x.s.end());
      key.insert(key.end(), x.sigma.begin(), x.sigma.end());
      lookup_.emplace(std::move(key), id);
      objects_.push_back(std::move(x));
      phi_.insert(phi_.end(), phi.begin(), phi.end());
      idx->singletons.insert(idx->singletons.end(), tuple.begin(), tuple.end());
    }
  }

  const std::size_t n = objects_.size();
  idx->n = n;
  if (n * n > 64'000'000)
    throw WindowError("HK(" + std::to_string(k) + "+) has " + std::to_string(n) + " objects; too many to index hom-sets");
  idx->hom_offset.resize(n * n + 1);
  idx->hom_offset[0] = 0;
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y) {
      std::uint64_t h = 1;
      for (unsigned i = 0; i < k && h; ++i)
        h *= window_->hom_size(idx->singletons[std::size_t(x) * k + i], idx->singletons[std::size_t(y) * k + i]);
      idx->hom_offset[std::size_t(x) * n + y + 1] = idx->hom_offset[std::size_t(x) * n + y] + h;
    }
  index_ = idx;

  const std::uint64_t total = idx->hom_offset.back();
  if (total > opts.max_morphisms) return;
  PresentedCategory::Builder b;
  b.reserve(n, total);
  for (ObjId x = 0; x < n; ++x) b.add_object();
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (std::uint64_t r = idx->hom_size(x, y); r > 0; --r) b.add_morphism(x, y);
  for (ObjId x = 0; x < n; ++x) {
    std::vector<MorId> ids(k);
    for (unsigned i = 0; i < k; ++i) ids[i] = wc.identity(idx->singletons[std::size_t(x) * k + i]);
    b.set_identity(x, MorId(*idx->id(x, x, ids)));
  }
  std::shared_ptr<const Index> cidx = idx;
  b.set_composer([cidx](MorId g, MorId f) {
    ObjId a, b1, b2, c;
    auto sf = cidx->decode(f, &a, &b1);
    const auto sg = cidx->decode(g, &b2, &c);
    const auto& w = cidx->window->category();
    for (unsigned i = 0; i < cidx->k; ++i) sf[i] = w.compose(sg[i], sf[i]);
    return MorId(*cidx->id(a, c, sf));
  });
  auto labels = std::make_shared<std::vector<std::string>>();
  for (ObjId x = 0; x < n; ++x) labels->push_back(object_label(x));
  b.set_object_labeler([labels](std::uint32_t x) { return (*labels)[x]; });
  b.set_morphism_labeler([cidx](std::uint32_t f) {
    const auto s = cidx->decode(f, nullptr, nullptr);
    std::string out = "(";
    for (unsigned i = 0; i < s.size(); ++i)
      out += (i ? ", " : "") + cidx->window->morphism(s[i]).to_string(cidx->window->kind());
    return out + ")";
  });
  auto cat = std::make_shared<PresentedCategory>(std::move(b).build());
  if (cat->composable_pairs() <= 20'000'000) cat->materialize();
  category_ = std::move(cat);
}

ObjId HKCategory::singleton(ObjId x, unsigned i) const { return index_->singletons[std::size_t(x) * k_ + i - 1]; }

std::optional<ObjId> HKCategory::find(const HKObject& x) const {
  if (x.k != k_) return std::nullopt;
  std::vector<std::uint32_t> key(x.s.begin(), x.s.end());
  key.insert(key.end(), x.sigma.begin(), x.sigma.end());
  const auto it = lookup_.find(key);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint32_t> HKCategory::components(std::size_t* count) const {
  const std::size_t n = objects_.size();
  detail::UnionFind uf(n);
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = x + 1; y < n; ++y)
      if (index_->hom_size(x, y) || index_->hom_size(y, x)) uf.unite(x, y);
  std::uint32_t c = 0;
  auto labels = uf.labels(&c);
  if (count) *count = c;
  return labels;
}

std::uint64_t HKCategory::morphism_count() const { return index_->hom_offset.back(); }
std::uint64_t HKCategory::hom_begin(ObjId x, ObjId y) const {
  return index_->hom_offset[std::size_t(x) * objects_.size() + y];
}
std::uint64_t HKCategory::hom_size(ObjId x, ObjId y) const { return index_->hom_size(x, y); }

std::optional<std::uint64_t> HKCategory::morphism_id(ObjId x, ObjId y, const std::vector<MorId>& singles) const {
  if (x >= objects_.size() || y >= objects_.size() || singles.size() != k_) return std::nullopt;
  return index_->id(x, y, singles);
}

std::vector<MorId> HKCategory::singles(std::uint64_t f, ObjId* dom, ObjId* cod) const {
  return index_->decode(f, dom, cod);
}

MorId HKCategory::component(ObjId x, ObjId y, const std::vector<MorId>& singles, std::uint32_t u) const {
  const auto& ac = ambient_->category();
  if (!u) return ac.identity(objects_[x].s[0]);
  const auto ms = members(u);
  if (ms.size() == 1) return to_ambient_[singles[ms[0] - 1]];
  MorId acc = to_ambient_[singles[ms[0] - 1]];
  for (std::size_t t = 1; t < ms.size(); ++t) {
    const auto p = ambient_->product_morphism(acc, to_ambient_[singles[ms[t] - 1]]);
    require_internal(p.has_value(), "HK: component left the ambient window");
    acc = *p;
  }
  return ac.compose(phi(y, u), ac.compose(acc, inverse(phi(x, u))));
}

std::optional<MorId> HKCategory::to_window(MorId f) const {
  if (ambient_ == window_) return f;
  const auto& m = ambient_->morphism(f);
  if (!window_->contains(m.dom()) || !window_->contains(m.cod())) return std::nullopt;
  return window_->morphism_id(m);
}

MorId HKCategory::inverse(MorId f) const {
  require_internal(inverse_[f] != kNoMorphism, "HK: inverse of a non-automorphism requested");
  return inverse_[f];
}

const PresentedCategory& HKCategory::category() const { return *category_ptr(); }

std::shared_ptr<const PresentedCategory> HKCategory::category_ptr() const {
  if (!category_)
    throw WindowError("HK(" + std::to_string(k_) + "+) has " + std::to_string(morphism_count()) +
                      " morphisms; too many to materialize as a category");
  return category_;
}

HKAxiomReport HKCategory::check_axioms(std::size_t max_reported) const {
  HKAxiomReport rep;
  const auto& ac = ambient_->category();
  const std::uint32_t nsub = 1u << k_;
  auto fail = [&](ObjId x, const std::string& what) {
    if (rep.violations.size() < max_reported) rep.violations.push_back("object " + std::to_string(x) + ": " + what);
  };
  auto prod = [&](MorId f, MorId g) {
    const auto p = ambient_->product_morphism(f, g);
    return p ? *p : kNoMorphism;
  };
  for (ObjId x = 0; x < objects_.size(); ++x) {
    const auto& o = objects_[x];
    ++rep.objects_checked;
    ++rep.equations_checked;
    if (o.s[0] != ambient_->unit()) fail(x, "(i) s_∅ is not the unit");
    for (std::uint32_t u = 0; u < nsub; ++u)
      for (std::uint32_t v = 0; v < nsub; ++v) {
        if (u & v) continue;
        const MorId sg = o.sig(u, v);
        ++rep.equations_checked;
        const auto dom = ambient_->product(o.s[u], o.s[v]);
        if (!dom || ac.dom(sg) != *dom || ac.cod(sg) != o.s[u | v]) {
          fail(x, "σ_{" + std::to_string(u) + "," + std::to_string(v) + "} has the wrong domain or codomain");
          continue;
        }
        if ((!u || !v) && sg != ac.identity(o.s[u | v])) fail(x, "(ii) σ with an empty side is not an identity");
        // (iv)
        ++rep.equations_checked;
        if (ac.compose(o.sig(v, u), ambient_->symmetry(o.s[u], o.s[v])) != sg)
          fail(x, "(iv) fails for U=" + std::to_string(u) + ", V=" + std::to_string(v));
        // (iii)
        for (std::uint32_t w = 0; w < nsub; ++w) {
          if (w & (u | v)) continue;
          ++rep.equations_checked;
          const MorId l1 = prod(sg, ac.identity(o.s[w]));
          const MorId r1 = prod(ac.identity(o.s[u]), o.sig(v, w));
          if (l1 == kNoMorphism || r1 == kNoMorphism) {
            fail(x, "(iii) leaves the ambient window");
            continue;
          }
          if (ac.compose(o.sig(u | v, w), l1) != ac.compose(o.sig(u, v | w), r1))
            fail(x, "(iii) fails for U=" + std::to_string(u) + ", V=" + std::to_string(v) + ", W=" +
                        std::to_string(w));
        }
      }
  }
  return rep;
}

std::string HKCategory::object_label(ObjId x) const {
  std::string out;
  for (unsigned i = 1; i <= k_; ++i)
    out += (i > 1 ? " " : "") + std::string("s") + std::to_string(i) + "=" +
           window_->object(singleton(x, i)).to_string(window_->kind());
  for (std::uint32_t u = 1; u < (1u << k_); ++u)
    if (std::popcount(u) >= 2) {
      out += " φ";
      for (unsigned i : members(u)) out += std::to_string(i);
      out += "=" + ambient_->morphism(phi(x, u)).to_string(ambient_->kind());
    }
  return out.empty() ? "*" : out;
}

nlohmann::json HKCategory::object_to_json(ObjId x) const {
  nlohmann::json j;
  const auto& o = objects_[x];
  j["k"] = k_;
  auto& s = j["s"] = nlohmann::json::object();
  for (std::uint32_t u = 0; u < (1u << k_); ++u) {
    const auto m = ambient_->object(o.s[u]);
    s[std::to_string(u)] = {m.m1, m.m2};
  }
  auto& sg = j["sigma"] = nlohmann::json::array();
  for (std::uint32_t u = 1; u < (1u << k_); ++u)
    for (std::uint32_t v = 1; v < (1u << k_); ++v)
      if (!(u & v)) sg.push_back({{"U", u}, {"V", v}, {"map", glj::to_json(ambient_->morphism(o.sig(u, v)))}});
  return j;
}

// ---- evaluation functor ----

nlohmann::json EvaluationReport::to_json() const {
  return {{"hk_objects", hk_objects},
          {"hk_morphisms", hk_morphisms},
          {"target_objects", target_objects},
          {"target_hit", target_hit},
          {"families_checked", families_checked},
          {"naturality_failures", naturality_failures},
          {"full", full},
          {"faithful", faithful},
          {"essentially_surjective", essentially_surjective},
          {"notes", notes}};
}

EvaluationReport check_evaluation(const HKCategory& hk, Exec exec) {
  EvaluationReport rep;
  const unsigned k = hk.k();
  const std::size_t n = hk.object_count();
  const auto& w = hk.window();
  const auto& amb = hk.ambient();
  const auto& ac = amb.category();
  const std::size_t nw = w.object_count();
  rep.hk_objects = n;
  rep.hk_morphisms = hk.morphism_count();
  rep.target_objects = 1;
  for (unsigned i = 0; i < k; ++i) rep.target_objects *= nw;
  std::vector<char> hit(rep.target_objects, 0);
  for (ObjId x = 0; x < n; ++x) {
    std::uint64_t t = 0;
    for (unsigned i = 1; i <= k; ++i) t = t * nw + hk.singleton(x, i);
    hit[t] = 1;
  }
  rep.target_hit = std::uint64_t(std::count(hit.begin(), hit.end(), 1));
  // Isomorphisms of I, Σ and J are automorphisms, so hitting every tuple is
  // the same as hitting every isomorphism class.
  rep.essentially_surjective = rep.target_hit == rep.target_objects;
  if (!rep.essentially_surjective)
    rep.notes.push_back(std::to_string(rep.target_objects - rep.target_hit) +
                        " singleton tuples have their sum outside the window");

  // f_{U} is forced by naturality along (U∖max, {max}); all other disjoint
  // pairs are then checked.
  const std::size_t wm = w.category().morphism_count();
  const bool tabulate = k == 2 && wm * wm <= 4'000'000;
  std::vector<MorId> ptab;
  if (tabulate) {
    ptab.assign(wm * wm, kNoMorphism);
    for (MorId f = 0; f < wm; ++f)
      for (MorId g = 0; g < wm; ++g)
        if (amb.product(ac.cod(hk.to_ambient(f)), ac.cod(hk.to_ambient(g))))
          ptab[f * wm + g] = *amb.product_morphism(hk.to_ambient(f), hk.to_ambient(g));
  }
  const std::uint32_t nsub = 1u << k;
  std::uint64_t families = 0, failures = 0;
  auto run = [&](ObjId x, std::uint64_t& fam, std::uint64_t& bad) {
    std::vector<MorId> single(k), fu(nsub);
    auto prod = [&](std::uint32_t u, std::uint32_t v) -> MorId {
      if (tabulate && std::popcount(u) == 1 && std::popcount(v) == 1)
        return ptab[single[std::countr_zero(u)] * wm + single[std::countr_zero(v)]];
      const auto p = amb.product_morphism(fu[u], fu[v]);
      return p ? *p : kNoMorphism;
    };
    const auto& ox = hk.object(x);
    for (ObjId y = 0; y < n; ++y) {
      if (!hk.hom_size(x, y)) continue;
      const auto& oy = hk.object(y);
      std::vector<std::uint64_t> size(k), pos(k, 0);
      for (unsigned i = 0; i < k; ++i) {
        size[i] = w.hom_size(hk.singleton(x, i + 1), hk.singleton(y, i + 1));
        single[i] = MorId(w.hom_begin(hk.singleton(x, i + 1), hk.singleton(y, i + 1)));
      }
      while (true) {
        ++fam;
        fu[0] = ac.identity(ox.s[0]);
        for (std::uint32_t u = 1; u < nsub; ++u) {
          if (std::popcount(u) == 1) {
            fu[u] = hk.to_ambient(single[std::countr_zero(u)]);
            continue;
          }
          const std::uint32_t top = 1u << (31 - std::countl_zero(u)), rest = u ^ top;
          fu[u] = ac.compose(oy.sig(rest, top), ac.compose(prod(rest, top), hk.inverse(ox.sig(rest, top))));
        }
        for (std::uint32_t u = 1; u < nsub; ++u)
          for (std::uint32_t v = 1; v < nsub; ++v) {
            if (u & v) continue;
            const MorId p = prod(u, v);
            if (p == kNoMorphism || ac.compose(oy.sig(u, v), p) != ac.compose(fu[u | v], ox.sig(u, v))) ++bad;
          }
        bool done = true;
        for (unsigned i = k; i-- > 0;) {
          if (++pos[i] < size[i]) {
            ++single[i];
            done = false;
            break;
          }
          single[i] -= MorId(pos[i] - 1);
          pos[i] = 0;
        }
        if (done) break;
      }
    }
  };
  if (exec == Exec::serial) {
    for (ObjId x = 0; x < n; ++x) run(x, families, failures);
  } else {
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : families, failures) num_threads(num_threads())
    for (std::int64_t x = 0; x < std::int64_t(n); ++x) run(ObjId(x), families, failures);
  }
  rep.families_checked = families;
  rep.naturality_failures = failures;
  rep.full = failures == 0 && families == rep.hk_morphisms;
  // Distinct singleton tuples give distinct families, and each tuple has at
  // most one natural extension (it is forced above).
  rep.faithful = true;
  return rep;
}

// ---- pushforward ----

HKObject hk_pushforward(const BasedMap& alpha, const HKObject& x) {
  alpha.check();
  require_input(alpha.source == x.k, "pushforward: map source " + std::to_string(alpha.source) +
                                         "+ does not match object over " + std::to_string(x.k) + "+");
  const unsigned t = alpha.target;
  HKObject y;
  y.k = t;
  y.s.resize(1u << t);
  y.sigma.assign(std::size_t(1) << (2 * t), kNoMorphism);
  for (std::uint32_t u = 0; u < (1u << t); ++u) y.s[u] = x.s[alpha.preimage(u)];
  for (std::uint32_t u = 0; u < (1u << t); ++u)
    for (std::uint32_t v = 0; v < (1u << t); ++v)
      if (!(u & v)) y.sigma[(u << t) | v] = x.sig(alpha.preimage(u), alpha.preimage(v));
  return y;
}

std::optional<std::vector<MorId>> hk_pushforward_morphism(const BasedMap& alpha, const HKCategory& src, ObjId x,
                                                          ObjId y, const std::vector<MorId>& singles) {
  require_input(alpha.source == src.k(), "pushforward: map source does not match HK(S)");
  std::vector<MorId> out;
  for (unsigned j = 1; j <= alpha.target; ++j) {
    const auto f = src.to_window(src.component(x, y, singles, alpha.preimage(bit(j))));
    if (!f) return std::nullopt;
    out.push_back(*f);
  }
  return out;
}

CatFunctor hk_functor(const BasedMap& alpha, const HKCategory& src, const HKCategory& dst) {
  require_input(alpha.source == src.k() && alpha.target == dst.k(), "hk_functor: based map does not match");
  CatFunctor f;
  f.source = &src.category();
  f.target = &dst.category();
  f.object_map.resize(src.object_count());
  for (ObjId x = 0; x < src.object_count(); ++x)
    f.object_map[x] = dst.find(hk_pushforward(alpha, src.object(x))).value_or(UINT32_MAX);
  f.morphism_map.assign(f.source->morphism_count(), kNoMorphism);
#pragma omp parallel for schedule(dynamic, 256) num_threads(num_threads())
  for (std::int64_t g = 0; g < std::int64_t(f.morphism_map.size()); ++g) {
    ObjId a, b;
    const auto s = src.singles(std::uint64_t(g), &a, &b);
    if (f.object_map[a] == UINT32_MAX || f.object_map[b] == UINT32_MAX) continue;
    const auto t = hk_pushforward_morphism(alpha, src, a, b, s);
    if (!t) continue;
    const auto id = dst.morphism_id(f.object_map[a], f.object_map[b], *t);
    if (id) f.morphism_map[g] = MorId(*id);
  }
  return f;
}

BGamma b_gamma(std::shared_ptr<const PermutativeWindow> window, unsigned k, int dim, const HKOptions& opts) {
  BGamma out;
  out.hk = std::make_shared<const HKCategory>(std::move(window), k, opts);
  out.nerve = nerve(out.hk->category(), dim);
  return out;
}

// ---- specialness ----

nlohmann::json SpecialnessReport::to_json() const {
  auto pairs = [&](const std::vector<std::pair<std::uint32_t, std::uint32_t>>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (auto [x, y] : v) a.push_back({degrees[x], degrees[y]});
    return a;
  };
  return {{"source_classes", source_classes},
          {"target_classes", degrees.size()},
          {"degrees", degrees},
          {"image_degrees", pairs(image)},
          {"boundary_missing", pairs(missing)},
          {"well_defined", well_defined},
          {"injective", injective},
          {"interior_covered", interior_covered}};
}

namespace {

SpecialnessReport assemble_specialness(std::size_t source_classes, const std::vector<int>& class_degree,
                                       const std::vector<std::uint32_t>& source_comp,
                                       const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pair_of_object) {
  SpecialnessReport rep;
  rep.source_classes = source_classes;
  rep.degrees = class_degree;
  std::vector<std::optional<std::pair<std::uint32_t, std::uint32_t>>> of_class(source_classes);
  rep.well_defined = true;
  for (std::size_t x = 0; x < source_comp.size(); ++x) {
    auto& c = of_class[source_comp[x]];
    if (!c) c = pair_of_object[x];
    else if (*c != pair_of_object[x]) rep.well_defined = false;
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> image;
  for (const auto& c : of_class) image.insert(*c);
  rep.image.assign(image.begin(), image.end());
  rep.injective = rep.well_defined && image.size() == source_classes;
  int maxabs = 0;
  for (int d : class_degree) maxabs = std::max(maxabs, std::abs(d));
  rep.interior_covered = true;
  for (std::uint32_t a = 0; a < class_degree.size(); ++a)
    for (std::uint32_t b = 0; b < class_degree.size(); ++b) {
      if (image.count({a, b})) continue;
      rep.missing.emplace_back(a, b);
      if (2 * std::abs(class_degree[a]) <= maxabs && 2 * std::abs(class_degree[b]) <= maxabs)
        rep.interior_covered = false;
    }
  return rep;
}

}  // namespace

SpecialnessReport bgamma_specialness(std::shared_ptr<const PermutativeWindow> window, const HKOptions& opts) {
  HKOptions o1 = opts;
  o1.mode = HKMode::uniform;
  const HKCategory h1(window, 1, o1), h2(window, 2, opts);
  std::size_t c1 = 0, c2 = 0;
  const auto comp1 = h1.components(&c1);
  const auto comp2 = h2.components(&c2);
  // classes of HK(1⁺) in ascending degree
  std::vector<int> deg_of(c1);
  for (ObjId x = 0; x < h1.object_count(); ++x) deg_of[comp1[x]] = window->degree(h1.singleton(x, 1));
  std::vector<std::uint32_t> order(c1);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return deg_of[a] < deg_of[b]; });
  std::vector<std::uint32_t> rank(c1);
  std::vector<int> degrees(c1);
  for (std::uint32_t r = 0; r < c1; ++r) {
    rank[order[r]] = r;
    degrees[r] = deg_of[order[r]];
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs(h2.object_count());
  const auto p1 = BasedMap::projection(2, 1), p2 = BasedMap::projection(2, 2);
  for (ObjId x = 0; x < h2.object_count(); ++x) {
    // HK(1⁺) objects are numbered like the window objects; the ambient of
    // HK(2⁺) may be larger, so go through the K-object.
    ObjId img[2];
    for (unsigned j = 0; j < 2; ++j) {
      const auto y = hk_pushforward(j ? p2 : p1, h2.object(x));
      const KObject m = h2.ambient().object(y.s[1]);
      require_internal(window->contains(m), "projection of an HK(2+) object left the window");
      img[j] = window->object_id(m);
      require_internal(h1.singleton(img[j], 1) == img[j], "HK(1+) numbering");
    }
    pairs[x] = {rank[comp1[img[0]]], rank[comp1[img[1]]]};
  }
  return assemble_specialness(c2, degrees, comp2, pairs);
}

// ---- γ(A) ----

std::vector<std::uint32_t> GammaValue::unpack(ObjId x, std::uint32_t point) const {
  std::vector<std::uint32_t> a(hk->k());
  for (unsigned i = 0; i < hk->k(); ++i) {
    const auto sz = sizes[hk->singleton(x, i + 1)];
    a[i] = point % sz;
    point /= sz;
  }
  return a;
}

namespace {

std::uint32_t pack(const GammaValue& g, ObjId x, const std::vector<std::uint32_t>& a) {
  std::uint64_t p = 0;
  for (unsigned i = g.hk->k(); i-- > 0;) p = p * g.sizes[g.hk->singleton(x, i + 1)] + a[i];
  return std::uint32_t(p);
}

}  // namespace

GammaValue gamma_value(const TabulatedMonoid& a, unsigned k, const HKOptions& opts) {
  require_input(opts.mode == HKMode::uniform, "γ(A) is evaluated on HK(S) in uniform mode");
  GammaValue g;
  g.hk = std::make_shared<const HKCategory>(a.window_ptr(), k, opts);
  const auto& hk = *g.hk;
  const auto& w = a.window();
  for (ObjId m = 0; m < w.object_count(); ++m) g.sizes.push_back(a.size(m));
  std::vector<std::uint32_t> sizes(hk.object_count());
  for (ObjId x = 0; x < hk.object_count(); ++x) {
    std::uint64_t s = 1;
    for (unsigned i = 1; i <= k; ++i) s *= a.size(hk.singleton(x, i));
    if (s > 100'000'000) throw WindowError("γ(A): value at an HK object has " + std::to_string(s) + " points");
    sizes[x] = std::uint32_t(s);
  }
  const auto& c = hk.category();
  std::vector<std::vector<std::uint32_t>> action(c.morphism_count());
#pragma omp parallel for schedule(dynamic, 256) num_threads(num_threads())
  for (std::int64_t f = 0; f < std::int64_t(action.size()); ++f) {
    ObjId x, y;
    const auto s = hk.singles(std::uint64_t(f), &x, &y);
    auto& out = action[f];
    out.resize(sizes[x]);
    for (std::uint32_t p = 0; p < sizes[x]; ++p) {
      auto v = g.unpack(x, p);
      for (unsigned i = 0; i < k; ++i) v[i] = a.act(s[i], v[i]);
      out[p] = pack(g, y, v);
    }
  }
  g.diagram = std::make_shared<const SetValuedDiagram>(hk.category_ptr(), std::move(sizes), std::move(action));
  // functorial by construction: A acts componentwise and HK composes componentwise
  g.elements = category_of_elements(*g.diagram, false);
  return g;
}

TruncatedSimplicialSet gamma_of_monoid(const TabulatedMonoid& a, unsigned k, int dim) {
  return nerve(gamma_value(a, k).elements.category, dim).sset;
}

StructureMap gamma_structure_map(const BasedMap& alpha, const TabulatedMonoid& a, const GammaValue& src,
                                 const GammaValue& dst, bool reverse_fibers) {
  alpha.check();
  require_input(alpha.source == src.hk->k() && alpha.target == dst.hk->k(),
                "structure map: based map does not match the evaluations");
  const auto hf = hk_functor(alpha, *src.hk, *dst.hk);
  const auto& se = src.elements;
  const auto& de = dst.elements;
  StructureMap out;
  auto& F = out.functor;
  F.source = &se.category;
  F.target = &de.category;
  F.object_map.assign(se.category.object_count(), UINT32_MAX);
  F.morphism_map.assign(se.category.morphism_count(), kNoMorphism);

  std::vector<std::vector<unsigned>> fiber(alpha.target + 1);
  for (unsigned v = 1; v <= alpha.source; ++v)
    if (alpha(v)) fiber[alpha(v)].push_back(v);
  if (reverse_fibers)
    for (auto& f : fiber) std::reverse(f.begin(), f.end());

  const auto& hs = *src.hk;
  for (ObjId x = 0; x < hs.object_count(); ++x) {
    const ObjId xt = hf.object_map[x];
    const auto n = src.diagram->size(x);
    if (xt == UINT32_MAX) {
      out.unmapped_objects += n;
      continue;
    }
    const auto& o = hs.object(x);
    for (std::uint32_t p = 0; p < n; ++p) {
      const auto av = src.unpack(x, p);
      std::vector<std::uint32_t> b(alpha.target);
      for (unsigned j = 1; j <= alpha.target; ++j) {
        const auto& V = fiber[j];
        if (V.empty()) {
          b[j - 1] = a.unit();
          continue;
        }
        std::uint32_t acc = av[V[0] - 1], mask = bit(V[0]);
        for (std::size_t t = 1; t < V.size(); ++t) {
          const std::uint32_t vb = bit(V[t]);
          require_internal(a.has_mult(o.s[mask], o.s[vb]), "structure map: product outside the window");
          const auto prod = a.mult(o.s[mask], acc, o.s[vb], av[V[t] - 1]);
          acc = a.act(o.sig(mask, vb), prod);
          mask |= vb;
        }
        b[j - 1] = acc;
      }
      F.object_map[se.element(x, p)] = de.element(xt, pack(dst, xt, b));
    }
  }
  const auto& hc = hs.category();
  for (MorId f = 0; f < hc.morphism_count(); ++f) {
    const MorId ft = hf.morphism_map[f];
    if (ft == kNoMorphism) continue;
    const ObjId x = hc.dom(f), xt = hf.object_map[x];
    for (std::uint32_t p = 0; p < src.diagram->size(x); ++p) {
      const auto q = F.object_map[se.element(x, p)] - de.object_offset[xt];
      F.morphism_map[se.lift(f, p)] = de.lift(ft, std::uint32_t(q));
    }
  }
  return out;
}

std::vector<std::vector<FaceRef>> nerve_map(const CatFunctor& f, const Nerve& src, const Nerve& dst, int dim) {
  require_input(dim <= src.sset.dim() && dim <= dst.sset.dim(), "nerve_map: dimension exceeds the nerves");
  std::vector<std::vector<FaceRef>> out(dim + 1);
  for (std::uint32_t x = 0; x < src.sset.count(0); ++x) out[0].push_back({f.object_map[x], 0});
  for (int n = 1; n <= dim; ++n) {
    out[n].resize(src.sset.count(n));
    for (std::uint32_t x = 0; x < src.sset.count(n); ++x) {
      const auto chain = src.chain(n, x);
      std::vector<MorId> kept;
      std::uint32_t mask = 0;
      for (int i = 0; i < n; ++i) {
        const MorId g = f.morphism_map[chain[i]];
        require_internal(g != kNoMorphism, "nerve_map: functor undefined on a morphism");
        if (f.target->is_identity(g)) mask |= 1u << i;
        else kept.push_back(g);
      }
      const ObjId start = f.object_map[f.source->dom(chain[0])];
      out[n][x] = {dst.find(start, kept), mask};
    }
  }
  return out;
}

SpecialnessReport gamma_specialness(const TabulatedMonoid& a) {
  const auto g1 = gamma_value(a, 1), g2 = gamma_value(a, 2);
  std::size_t c1 = 0, c2 = 0;
  const auto comp1 = object_components(g1.elements.category, &c1);
  const auto comp2 = object_components(g2.elements.category, &c2);
  std::vector<int> deg(c1);
  for (ObjId e = 0; e < comp1.size(); ++e)
    deg[comp1[e]] = a.window().degree(g1.hk->singleton(g1.elements.base_object[e], 1));
  const auto f1 = gamma_structure_map(BasedMap::projection(2, 1), a, g2, g1);
  const auto f2 = gamma_structure_map(BasedMap::projection(2, 2), a, g2, g1);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs(comp2.size());
  for (ObjId e = 0; e < comp2.size(); ++e) {
    const auto x = f1.functor.object_map[e], y = f2.functor.object_map[e];
    require_internal(x != UINT32_MAX && y != UINT32_MAX, "projection of a γ(A)(2+) element left the window");
    pairs[e] = {comp1[x], comp1[y]};
  }
  return assemble_specialness(c2, deg, comp2, pairs);
}

// ---- the circle ----

namespace {

BasedMap circle_face(unsigned m, unsigned i) {
  BasedMap f{m, m - 1, std::vector<unsigned>(m + 1, 0)};
  for (unsigned j = 1; j <= m; ++j) {
    const unsigned t = i < j ? j - 1 : j;
    f.values[j] = t == m ? 0 : t;
  }
  return f;
}

BasedMap circle_degeneracy(unsigned m, unsigned i) {
  BasedMap f{m, m + 1, std::vector<unsigned>(m + 1, 0)};
  for (unsigned j = 1; j <= m; ++j) f.values[j] = j > i ? j + 1 : j;
  return f;
}

using Key = std::vector<std::uint32_t>;

// A truncated simplicial set given by all of its simplices (degenerate ones
// included), faces and degeneracies, normalized to nondegenerate simplices.
template <class Face, class Degen>
TruncatedSimplicialSet normalize(const std::vector<std::vector<Key>>& all, Face face, Degen degen) {
  const int dim = int(all.size()) - 1;
  std::vector<std::map<Key, std::uint32_t>> index(dim + 1);
  for (int m = 0; m <= dim; ++m)
    for (std::uint32_t i = 0; i < all[m].size(); ++i) index[m].emplace(all[m][i], i);
  auto id_of = [&](int m, const Key& key) {
    const auto it = index[m].find(key);
    require_internal(it != index[m].end(), "diagonal: a face left the enumerated simplices");
    return it->second;
  };
  // degeneracy set and nondegenerate id per simplex
  std::vector<std::vector<std::uint32_t>> degset(dim + 1), nd(dim + 1);
  for (int m = 0; m <= dim; ++m) {
    degset[m].assign(all[m].size(), 0);
    nd[m].assign(all[m].size(), UINT32_MAX);
    std::uint32_t next = 0;
    for (std::uint32_t z = 0; z < all[m].size(); ++z) {
      for (int i = 0; i < m; ++i)
        if (degen(m - 1, face(m, all[m][z], i), i) == all[m][z]) degset[m][z] |= 1u << i;
      if (!degset[m][z]) nd[m][z] = next++;
    }
  }
  TruncatedSimplicialSet out(dim);
  for (int m = 0; m <= dim; ++m) {
    std::size_t c = 0;
    for (auto v : nd[m]) c += v != UINT32_MAX;
    out.set_count(m, c);
  }
  for (int m = 1; m <= dim; ++m)
    for (std::uint32_t z = 0; z < all[m].size(); ++z) {
      if (nd[m][z] == UINT32_MAX) continue;
      for (int i = 0; i <= m; ++i) {
        Key w = face(m, all[m][z], i);
        std::uint32_t wid = id_of(m - 1, w);
        const std::uint32_t mask = degset[m - 1][wid];
        int level = m - 1;
        for (int j = m - 2; j >= 0; --j)
          if (mask >> j & 1) {
            w = face(level, w, j);
            --level;
          }
        wid = id_of(level, w);
        require_internal(nd[level][wid] != UINT32_MAX, "diagonal: degeneracy normal form failed");
        out.set_face(m, nd[m][z], i, {nd[level][wid], mask});
      }
    }
  return out;
}

}  // namespace

TruncatedSimplicialSet bar_construction(const Pi0Monoid& m, int dim) {
  require_input(dim >= 0, "bar construction: negative dimension");
  auto mul = [&](std::uint32_t x, std::uint32_t y) { return m.multiply(x, y); };
  std::vector<std::vector<Key>> tuples(dim + 1);
  tuples[0].push_back({});
  for (int n = 1; n <= dim; ++n)
    for (const auto& t : tuples[n - 1])
      for (std::uint32_t x = 0; x < m.size; ++x) {
        if (x == m.unit) continue;
        // every contiguous product ending at x must be defined
        bool ok = true;
        std::optional<std::uint32_t> suffix = x;
        for (std::size_t s = t.size(); s-- > 0 && ok;) {
          suffix = mul(t[s], *suffix);
          ok = suffix.has_value();
        }
        if (!ok) continue;
        Key u = t;
        u.push_back(x);
        tuples[n].push_back(std::move(u));
      }
  std::vector<std::map<Key, std::uint32_t>> index(dim + 1);
  for (int n = 0; n <= dim; ++n)
    for (std::uint32_t i = 0; i < tuples[n].size(); ++i) index[n].emplace(tuples[n][i], i);
  TruncatedSimplicialSet out(dim);
  for (int n = 0; n <= dim; ++n) out.set_count(n, tuples[n].size());
  for (int n = 1; n <= dim; ++n)
    for (std::uint32_t z = 0; z < tuples[n].size(); ++z) {
      const auto& t = tuples[n][z];
      for (int i = 0; i <= n; ++i) {
        Key w;
        std::uint32_t mask = 0;
        if (i == 0) w.assign(t.begin() + 1, t.end());
        else if (i == n) w.assign(t.begin(), t.end() - 1);
        else {
          const auto p = mul(t[i - 1], t[i]);
          require_internal(p.has_value(), "bar construction: product left the window");
          w.assign(t.begin(), t.begin() + i - 1);
          if (*p == m.unit) mask = 1u << (i - 1);
          else w.push_back(*p);
          w.insert(w.end(), t.begin() + i + 1, t.end());
        }
        out.set_face(n, z, i, {index[n - 1 - std::popcount(mask)].at(w), mask});
      }
    }
  return out;
}

GammaCircle gamma_circle(const TabulatedMonoid& a, int dim) {
  require_input(dim >= 1 && dim <= 3, "gamma_circle: dimension must be 1, 2 or 3");
  std::vector<GammaValue> g;
  for (int m = 0; m <= dim; ++m) g.push_back(gamma_value(a, unsigned(m)));
  // face[m][i]: level m -> m-1; degen[m][i]: level m -> m+1
  std::vector<std::vector<CatFunctor>> face(dim + 1), degen(dim + 1);
  for (int m = 1; m <= dim; ++m)
    for (int i = 0; i <= m; ++i)
      face[m].push_back(gamma_structure_map(circle_face(m, i), a, g[m], g[m - 1]).functor);
  for (int m = 0; m < dim; ++m)
    for (int i = 0; i <= m; ++i)
      degen[m].push_back(gamma_structure_map(circle_degeneracy(m, i), a, g[m], g[m + 1]).functor);

  // level m: all m-chains (identities included) of the elements category at m⁺
  std::vector<std::vector<Key>> all(dim + 1);
  GammaCircle out;
  for (int m = 0; m <= dim; ++m) {
    const auto& c = g[m].elements.category;
    if (m == 0) {
      for (ObjId x = 0; x < c.object_count(); ++x) all[0].push_back({x});
    } else {
      std::vector<Key> cur;
      for (ObjId x = 0; x < c.object_count(); ++x)
        for (MorId f : c.out(x)) cur.push_back({f});
      for (int len = 1; len < m; ++len) {
        std::vector<Key> nxt;
        for (const auto& ch : cur)
          for (MorId f : c.out(c.cod(ch.back()))) {
            Key e = ch;
            e.push_back(f);
            nxt.push_back(std::move(e));
          }
        if (nxt.size() > 20'000'000) throw WindowError("gamma_circle: too many simplices at level " + std::to_string(m));
        cur = std::move(nxt);
      }
      all[m] = std::move(cur);
    }
    out.level_simplices.push_back(all[m].size());
  }

  auto apply = [](const CatFunctor& F, int level, const Key& k) {
    Key r(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) {
      r[i] = level == 0 ? F.object_map[k[i]] : F.morphism_map[k[i]];
      require_internal(r[i] != UINT32_MAX, "gamma_circle: structure map undefined");
    }
    return r;
  };
  auto vface = [&](int m, const Key& k, int i) -> Key {
    const auto& c = g[m].elements.category;
    if (m == 1) return {i == 0 ? c.cod(k[0]) : c.dom(k[0])};
    Key r;
    for (int t = 0; t < m; ++t) {
      if ((i == 0 && t == 0) || (i == m && t == m - 1)) continue;
      if (i > 0 && i < m && t == i) continue;
      if (i > 0 && i < m && t == i - 1) r.push_back(c.compose(k[i], k[i - 1]));
      else r.push_back(k[t]);
    }
    return r;
  };
  auto vdegen = [&](int m, const Key& k, int i) -> Key {
    const auto& c = g[m].elements.category;
    if (m == 0) return {c.identity(k[0])};
    const ObjId v = i == 0 ? c.dom(k[0]) : c.cod(k[i - 1]);
    Key r = k;
    r.insert(r.begin() + i, c.identity(v));
    return r;
  };
  auto dface = [&](int m, const Key& k, int i) { return apply(face[m][i], m - 1, vface(m, k, i)); };
  auto ddegen = [&](int m, const Key& k, int i) { return apply(degen[m][i], 1, vdegen(m, k, i)); };
  out.diagonal = normalize(all, dface, ddegen);
  out.bar = bar_construction(pi0_hocolim(a), dim);
  return out;
}

}  // namespace glj
