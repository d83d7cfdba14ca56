#include "glj/permcat.hpp"

#include "glj/errors.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace glj {

namespace {

std::string table_text(std::span<const std::uint8_t> t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(unsigned(t[i]));
  return s + "]";
}

// Rank of sigma among bijections complement(beta1) -> complement(beta2).
std::uint64_t sigma_rank(const KMorphism& f) {
  const auto comp2 = complement(f.beta2);
  std::vector<unsigned> pos(f.sigma.size());
  for (std::size_t i = 0; i < f.sigma.size(); ++i)
    pos[i] = static_cast<unsigned>(std::lower_bound(comp2.begin(), comp2.end(), f.sigma[i]) - comp2.begin() + 1);
  return injection_rank(Injection(pos.size(), pos));
}

}  // namespace

std::string to_string(IndexKind k) {
  switch (k) {
    case IndexKind::I: return "I";
    case IndexKind::Sigma: return "Sigma";
    case IndexKind::J: return "J";
  }
  return "?";
}

IndexKind parse_index_kind(const std::string& s) {
  if (s == "i" || s == "I") return IndexKind::I;
  if (s == "sigma" || s == "Sigma" || s == "s") return IndexKind::Sigma;
  if (s == "j" || s == "J") return IndexKind::J;
  throw InputError("unknown category '" + s + "' (expected i, sigma or j)");
}

std::string KObject::to_string(IndexKind k) const {
  if (k != IndexKind::J) return std::to_string(m1);
  return "(" + std::to_string(m1) + "," + std::to_string(m2) + ")";
}

std::string KMorphism::to_string(IndexKind k) const {
  if (k != IndexKind::J) return beta1.to_string();
  return "(" + beta1.to_string() + ", " + beta2.to_string() + ", " + table_text({sigma.data(), sigma.size()}) + ")";
}

void check_morphism(IndexKind k, const KMorphism& f) {
  if (k != IndexKind::J) {
    require_input(f.beta2.domain_size() == 0 && f.beta2.codomain_size() == 0 && f.sigma.empty(),
                  "morphism of " + to_string(k) + " must have empty second coordinate");
    if (k == IndexKind::Sigma) require_input(f.beta1.is_bijection(), "morphism of Sigma must be a bijection");
    return;
  }
  const auto c1 = complement(f.beta1), c2 = complement(f.beta2);
  require_input(c1.size() == c2.size(), "J-morphism between objects of different degree");
  require_input(f.sigma.size() == c1.size(), "J-morphism: sigma must be defined on the complement of beta1");
  std::vector<unsigned> s(f.sigma.begin(), f.sigma.end());
  std::sort(s.begin(), s.end());
  require_input(s == c2, "J-morphism: sigma must be a bijection onto the complement of beta2");
}

KMorphism k_identity(IndexKind k, KObject x) {
  if (k != IndexKind::J) x.m2 = 0;
  return {Injection::identity(x.m1), Injection::identity(x.m2), {}};
}

KMorphism k_compose(IndexKind k, const KMorphism& g, const KMorphism& f) {
  require_input(f.cod() == g.dom(), "compose: codomain of the first is not the domain of the second");
  KMorphism r{compose(g.beta1, f.beta1), compose(g.beta2, f.beta2), {}};
  if (k != IndexKind::J) return r;
  // preimage position of x under g.beta1, or 0
  Injection::Table pre(g.beta1.codomain_size() + 1, 0);
  for (std::size_t y = 1; y <= g.beta1.domain_size(); ++y) pre[g.beta1(y)] = static_cast<std::uint8_t>(y);
  // f.sigma indexed by position in complement(f.beta1)
  Injection::Table fpos(f.beta1.codomain_size() + 1, 0);
  {
    std::size_t i = 0;
    for (unsigned y : complement(f.beta1)) fpos[y] = static_cast<std::uint8_t>(i++);
  }
  const auto gcomp = complement(g.beta1);
  std::size_t gi = 0;
  for (unsigned x : complement(r.beta1)) {
    if (pre[x] == 0) {
      while (gcomp[gi] != x) ++gi;
      r.sigma.push_back(g.sigma[gi]);
    } else {
      const unsigned y = pre[x];
      r.sigma.push_back(static_cast<std::uint8_t>(g.beta2(f.sigma[fpos[y]])));
    }
  }
  return r;
}

KObject k_product(KObject x, KObject y) { return {x.m1 + y.m1, x.m2 + y.m2}; }

KMorphism k_product(IndexKind k, const KMorphism& f, const KMorphism& g) {
  KMorphism r{block_sum(f.beta1, g.beta1), block_sum(f.beta2, g.beta2), f.sigma};
  if (k != IndexKind::J) return r;
  for (auto v : g.sigma) r.sigma.push_back(static_cast<std::uint8_t>(v + f.beta2.codomain_size()));
  return r;
}

KMorphism k_symmetry(IndexKind k, KObject x, KObject y) {
  if (k != IndexKind::J) return {shuffle(x.m1, y.m1), Injection::identity(0), {}};
  return {shuffle(x.m1, y.m1), shuffle(x.m2, y.m2), {}};
}

std::uint64_t k_hom_count(IndexKind k, KObject a, KObject b) {
  switch (k) {
    case IndexKind::I:
      return a.m2 == 0 && b.m2 == 0 ? injection_count(a.m1, b.m1) : 0;
    case IndexKind::Sigma:
      return a.m2 == 0 && b.m2 == 0 && a.m1 == b.m1 ? factorial(a.m1) : 0;
    case IndexKind::J:
      if (a.m1 > b.m1 || a.m2 > b.m2 || degree(a) != degree(b)) return 0;
      return injection_count(a.m1, b.m1) * injection_count(a.m2, b.m2) * factorial(b.m1 - a.m1);
  }
  return 0;
}

std::uint64_t k_hom_rank(IndexKind k, const KMorphism& f) {
  if (k != IndexKind::J) return injection_rank(f.beta1);
  const KObject a = f.dom(), b = f.cod();
  return (injection_rank(f.beta1) * injection_count(a.m2, b.m2) + injection_rank(f.beta2)) * factorial(b.m1 - a.m1) +
         sigma_rank(f);
}

KMorphism k_hom_unrank(IndexKind k, KObject a, KObject b, std::uint64_t rank) {
  require_input(rank < k_hom_count(k, a, b), "hom-set rank out of range");
  if (k != IndexKind::J) return {injection_unrank(a.m1, b.m1, rank), Injection::identity(0), {}};
  const std::uint64_t kf = factorial(b.m1 - a.m1), n2 = injection_count(a.m2, b.m2);
  const std::uint64_t p = rank % kf, q = rank / kf;
  KMorphism f{injection_unrank(a.m1, b.m1, q / n2), injection_unrank(a.m2, b.m2, q % n2), {}};
  const auto perm = injection_unrank(b.m1 - a.m1, b.m1 - a.m1, p);
  const auto comp2 = complement(f.beta2);
  for (auto v : perm.table()) f.sigma.push_back(static_cast<std::uint8_t>(comp2[v - 1]));
  return f;
}

std::vector<KMorphism> k_homset(IndexKind k, KObject a, KObject b) {
  std::vector<KMorphism> out;
  const auto n = k_hom_count(k, a, b);
  out.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r) out.push_back(k_hom_unrank(k, a, b, r));
  return out;
}

nlohmann::json to_json(const KMorphism& f) {
  nlohmann::json j;
  j["dom"] = {f.dom().m1, f.dom().m2};
  j["cod"] = {f.cod().m1, f.cod().m2};
  j["beta1"] = f.beta1.values();
  j["beta2"] = f.beta2.values();
  j["sigma"] = std::vector<unsigned>(f.sigma.begin(), f.sigma.end());
  return j;
}

KMorphism kmorphism_from_json(IndexKind k, const nlohmann::json& j) {
  try {
    const auto cod = j.at("cod").get<std::vector<unsigned>>();
    require_input(cod.size() == 2, "morphism JSON: cod must have two entries");
    KMorphism f;
    f.beta1 = Injection(cod[0], j.at("beta1").get<std::vector<unsigned>>());
    f.beta2 = Injection(cod[1], j.value("beta2", std::vector<unsigned>{}));
    for (unsigned v : j.value("sigma", std::vector<unsigned>{})) {
      require_input(v <= kMaxSetSize, "morphism JSON: sigma value out of range");
      f.sigma.push_back(static_cast<std::uint8_t>(v));
    }
    if (j.contains("dom")) {
      const auto dom = j.at("dom").get<std::vector<unsigned>>();
      require_input(dom.size() == 2 && dom[0] == f.dom().m1 && dom[1] == f.dom().m2,
                    "morphism JSON: dom disagrees with the injections");
    }
    check_morphism(k, f);
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("morphism JSON: ") + e.what());
  }
}

// ------------------------------------------------------------------ window

PermutativeWindow::PermutativeWindow(IndexKind kind, unsigned bound1, unsigned bound2)
    : kind_(kind), b1_(bound1), b2_(kind == IndexKind::J ? bound2 : 0) {
  require_input(b1_ <= 12 && b2_ <= 12, "window bound too large (at most 12 per coordinate)");
  for (unsigned m1 = 0; m1 <= b1_; ++m1)
    for (unsigned m2 = 0; m2 <= b2_; ++m2) objects_.push_back({m1, m2});
  const std::size_t n = objects_.size();
  hom_offset_.assign(n * n + 1, 0);
  std::uint64_t total = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      hom_offset_[a * n + b] = static_cast<MorId>(total);
      total += k_hom_count(kind_, objects_[a], objects_[b]);
      if (total >= kNoMorphism) throw WindowError("window has too many morphisms to enumerate");
    }
  hom_offset_[n * n] = static_cast<MorId>(total);
  if (total > 20'000'000) throw WindowError("window has too many morphisms to enumerate");
  {
    auto decoded = std::make_shared<std::vector<KMorphism>>();
    decoded->reserve(total);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto hs = k_homset(kind_, objects_[a], objects_[b]);
        std::move(hs.begin(), hs.end(), std::back_inserter(*decoded));
      }
    decoded_ = std::move(decoded);
  }

  PresentedCategory::Builder bld;
  bld.reserve(n, total);
  for (std::size_t a = 0; a < n; ++a) bld.add_object();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto count = hom_offset_[a * n + b + 1] - hom_offset_[a * n + b];
      for (std::uint64_t r = 0; r < count; ++r) bld.add_morphism(ObjId(a), ObjId(b));
    }
  // Identities have rank 0 in their endomorphism set.
  for (std::size_t a = 0; a < n; ++a) bld.set_identity(ObjId(a), hom_offset_[a * n + a]);
  // The callbacks hold their own copies of the numbering.
  auto self = std::make_shared<PermutativeWindow>(*this);
  bld.set_composer([self](MorId g, MorId f) {
    return self->morphism_id(k_compose(self->kind_, self->morphism(g), self->morphism(f)));
  });
  bld.set_object_labeler([self](std::uint32_t x) { return self->objects_[x].to_string(self->kind_); });
  bld.set_morphism_labeler([self](std::uint32_t f) { return self->morphism(f).to_string(self->kind_); });
  auto cat = std::make_shared<PresentedCategory>(std::move(bld).build());
  if (cat->composable_pairs() <= 50'000'000) cat->materialize();
  category_ = std::move(cat);
}

std::shared_ptr<const PermutativeWindow> PermutativeWindow::make(IndexKind kind, unsigned bound) {
  return std::make_shared<const PermutativeWindow>(kind, bound, bound);
}

ObjId PermutativeWindow::object_id(KObject x) const {
  if (!contains(x)) throw WindowError("object " + x.to_string(kind_) + " lies outside the window");
  return static_cast<ObjId>(x.m1 * (b2_ + 1) + x.m2);
}

MorId PermutativeWindow::morphism_id(const KMorphism& f) const {
  const ObjId a = object_id(f.dom()), b = object_id(f.cod());
  return static_cast<MorId>(hom_begin(a, b) + k_hom_rank(kind_, f));
}

std::optional<ObjId> PermutativeWindow::product(ObjId a, ObjId b) const {
  const KObject p = k_product(objects_[a], objects_[b]);
  if (!contains(p)) return std::nullopt;
  return object_id(p);
}

std::optional<MorId> PermutativeWindow::product_morphism(MorId f, MorId g) const {
  const auto& c = category();
  if (!product(c.cod(f), c.cod(g))) return std::nullopt;
  return morphism_id(k_product(kind_, morphism(f), morphism(g)));
}

MorId PermutativeWindow::symmetry(ObjId a, ObjId b) const {
  return morphism_id(k_symmetry(kind_, objects_[a], objects_[b]));
}

DiagonalFunctor diagonal_functor(unsigned bound) {
  DiagonalFunctor d;
  d.source = PermutativeWindow::make(IndexKind::I, bound);
  d.target = PermutativeWindow::make(IndexKind::J, bound);
  d.functor.source = &d.source->category();
  d.functor.target = &d.target->category();
  for (ObjId x = 0; x < d.source->object_count(); ++x) {
    const unsigned m = d.source->object(x).m1;
    d.functor.object_map.push_back(d.target->object_id({m, m}));
  }
  for (MorId f = 0; f < d.source->category().morphism_count(); ++f) {
    const auto a = d.source->morphism(f);
    KMorphism j{a.beta1, a.beta1, {}};
    for (unsigned x : complement(a.beta1)) j.sigma.push_back(static_cast<std::uint8_t>(x));
    d.functor.morphism_map.push_back(d.target->morphism_id(j));
  }
  return d;
}

}  // namespace glj
