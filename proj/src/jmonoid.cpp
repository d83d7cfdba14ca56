#include "glj/jmonoid.hpp"

#include "detail/union_find.hpp"
#include "glj/errors.hpp"
#include "glj/topo.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

namespace glj {

namespace {

using detail::UnionFind;

class Reporter {
 public:
  Reporter(std::vector<std::string>& out, std::size_t cap) : out_(out), cap_(cap) {}
  void operator()(const std::string& s) {
    if (out_.size() < cap_) out_.push_back(s);
  }

 private:
  std::vector<std::string>& out_;
  std::size_t cap_;
};

std::string obj_text(const PermutativeWindow& w, ObjId k) { return w.object(k).to_string(w.kind()); }

// Block permutation of p blocks of size m: block i goes to block pi(i).
Injection block_permutation(const Injection& pi, unsigned m) {
  const std::size_t p = pi.domain_size();
  std::vector<unsigned> v(p * m);
  for (std::size_t i = 0; i < p; ++i)
    for (unsigned j = 1; j <= m; ++j) v[i * m + j - 1] = (pi(i + 1) - 1) * m + j;
  return Injection(p * m, v);
}

KObject power(KObject g, unsigned p) { return {g.m1 * p, g.m2 * p}; }

FreeMonoid build_orbit_monoid(KObject g, unsigned max_p, std::shared_ptr<const PermutativeWindow> window) {
  const auto& w = *window;
  const auto& c = w.category();
  const std::size_t n = w.object_count();
  // block permutation automorphisms of g^⊞p
  std::vector<std::vector<MorId>> blocks(max_p + 1);
  for (unsigned p = 0; p <= max_p; ++p)
    for (const auto& pi : enumerate_injections(p, p)) {
      KMorphism b{block_permutation(pi, g.m1), block_permutation(pi, g.m2), {}};
      if (w.kind() != IndexKind::J) b.beta2 = Injection::identity(0);
      blocks[p].push_back(w.morphism_id(b));
    }
  auto orbit_min = [&](MorId f, unsigned p) {
    MorId best = kNoMorphism;
    for (MorId b : blocks[p]) best = std::min(best, c.compose(f, b));
    return best;
  };

  FreeMonoid out{terminal_monoid(window), g, max_p, {}, {}, {}};
  out.length.resize(n);
  out.representative.resize(n);
  std::unordered_map<MorId, std::uint32_t> index;
  for (ObjId l = 0; l < n; ++l)
    for (unsigned p = 0; p <= max_p; ++p) {
      const ObjId gp = w.object_id(power(g, p));
      const MorId begin = w.hom_begin(gp, l);
      for (MorId f = begin; f < begin + w.hom_size(gp, l); ++f) {
        if (orbit_min(f, p) != f) continue;
        index[f] = static_cast<std::uint32_t>(out.representative[l].size());
        out.representative[l].push_back(f);
        out.length[l].push_back(p);
      }
    }
  // orbit class of every morphism out of some g^p, computed once
  std::vector<std::uint32_t> klass(c.morphism_count(), UINT32_MAX);
  for (ObjId l = 0; l < n; ++l)
    for (unsigned p = 0; p <= max_p; ++p) {
      const ObjId gp = w.object_id(power(g, p));
      const MorId begin = w.hom_begin(gp, l);
      for (MorId f = begin; f < begin + w.hom_size(gp, l); ++f) klass[f] = index.at(orbit_min(f, p));
    }
  auto point = [&](MorId f, unsigned) { return klass[f]; };

  std::vector<std::uint32_t> sizes(n);
  for (ObjId l = 0; l < n; ++l) sizes[l] = static_cast<std::uint32_t>(out.representative[l].size());
  std::vector<std::vector<std::uint32_t>> action(c.morphism_count());
  const auto morphisms = static_cast<std::int64_t>(c.morphism_count());
#pragma omp parallel for schedule(dynamic, 64) num_threads(num_threads())
  for (std::int64_t h = 0; h < morphisms; ++h) {
    const ObjId l = c.dom(h);
    action[h].reserve(sizes[l]);
    for (std::uint32_t a = 0; a < sizes[l]; ++a)
      action[h].push_back(point(c.compose(h, out.representative[l][a]), out.length[l][a]));
  }
  std::vector<std::vector<std::uint32_t>> mult(n * n);
  for (ObjId k = 0; k < n; ++k)
    for (ObjId l = 0; l < n; ++l) {
      if (!w.product(k, l)) continue;
      auto& t = mult[k * n + l];
      t.reserve(std::size_t(sizes[k]) * sizes[l]);
      for (std::uint32_t a = 0; a < sizes[k]; ++a)
        for (std::uint32_t b = 0; b < sizes[l]; ++b) {
          const MorId f = *w.product_morphism(out.representative[k][a], out.representative[l][b]);
          t.push_back(point(f, out.length[k][a] + out.length[l][b]));
        }
    }
  const std::uint32_t unit = index.at(c.identity(w.unit()));
  out.monoid = TabulatedMonoid(window, std::move(sizes), std::move(action), std::move(mult), unit);
  auto reps = std::make_shared<std::vector<std::vector<MorId>>>(out.representative);
  auto lens = std::make_shared<std::vector<std::vector<unsigned>>>(out.length);
  out.monoid.set_labeler([window, reps, lens](ObjId k, std::uint32_t a) {
    return "p=" + std::to_string((*lens)[k][a]) + " " + window->category().morphism_label((*reps)[k][a]);
  });
  return out;
}

}  // namespace

// ---------------------------------------------------------------- monoid

TabulatedMonoid::TabulatedMonoid(std::shared_ptr<const PermutativeWindow> window, std::vector<std::uint32_t> sizes,
                                 std::vector<std::vector<std::uint32_t>> action,
                                 std::vector<std::vector<std::uint32_t>> mult, std::uint32_t unit)
    : window_(std::move(window)), objects_(window_->object_count()), unit_(unit) {
  const auto& c = window_->category();
  require_input(sizes.size() == objects_, "monoid: one value size per object required");
  require_input(action.size() == c.morphism_count(), "monoid: one action map per morphism required");
  require_input(mult.size() == objects_ * objects_, "monoid: one mult table per object pair required");
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    if (action[f].size() != sizes[c.dom(f)])
      throw InputError("monoid: action of " + c.morphism_label(f) + " has the wrong length");
    for (auto v : action[f])
      if (v >= sizes[c.cod(f)]) throw InputError("monoid: action of " + c.morphism_label(f) + " out of range");
  }
  product_.assign(objects_ * objects_, kNoObject);
  for (ObjId k = 0; k < objects_; ++k)
    for (ObjId l = 0; l < objects_; ++l) {
      const auto p = window_->product(k, l);
      auto& t = mult[k * objects_ + l];
      if (!p) {
        require_input(t.empty(), "monoid: mult table given for a product outside the window");
        continue;
      }
      product_[k * objects_ + l] = *p;
      require_input(t.size() == std::size_t(sizes[k]) * sizes[l],
                    "monoid: mult table " + obj_text(*window_, k) + " x " + obj_text(*window_, l) + " has the wrong size");
      for (auto v : t) require_input(v < sizes[*p], "monoid: mult value out of range");
    }
  require_input(unit < sizes[window_->unit()], "monoid: unit is not a point of the value at the unit object");
  diagram_ = std::make_shared<const SetValuedDiagram>(window_->category_ptr(), std::move(sizes), std::move(action));
  mult_ = std::move(mult);
}

std::uint64_t TabulatedMonoid::element_count() const {
  std::uint64_t n = 0;
  for (ObjId k = 0; k < objects_; ++k) n += size(k);
  return n;
}

std::string TabulatedMonoid::element_label(ObjId k, std::uint32_t a) const {
  if (labeler_) return labeler_(k, a);
  return std::to_string(a);
}

MonoidCheckReport TabulatedMonoid::check(const MonoidCheckOptions& opts) const {
  MonoidCheckReport rep;
  Reporter report(rep.violations, opts.max_reported);
  const auto& c = window_->category();
  const auto& w = *window_;
  std::mt19937_64 rng(opts.seed);
  auto uniform = [&](std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); };

  for (const auto& v : diagram_->check(opts.max_reported)) report(v);

  const ObjId e = w.unit();
  for (ObjId k = 0; k < objects_; ++k)
    for (std::uint32_t a = 0; a < size(k); ++a) {
      ++rep.instances_checked;
      if (mult(e, unit_, k, a) != a || mult(k, a, e, unit_) != a)
        report("unit law fails at " + obj_text(w, k) + " point " + std::to_string(a));
    }

  // Associativity over object triples inside the window.
  std::vector<std::array<ObjId, 3>> triples;
  std::uint64_t assoc_total = 0;
  for (ObjId k = 0; k < objects_; ++k)
    for (ObjId l = 0; l < objects_; ++l) {
      if (!has_mult(k, l)) continue;
      for (ObjId m = 0; m < objects_; ++m)
        if (has_mult(product(k, l), m)) {
          triples.push_back({k, l, m});
          assoc_total += std::uint64_t(size(k)) * size(l) * size(m);
        }
    }
  auto assoc_one = [&](const std::array<ObjId, 3>& t, std::uint32_t a, std::uint32_t b, std::uint32_t d) {
    const auto [k, l, m] = t;
    ++rep.instances_checked;
    const auto lhs = mult(product(k, l), mult(k, a, l, b), m, d);
    const auto rhs = mult(k, a, product(l, m), mult(l, b, m, d));
    if (lhs != rhs)
      report("associativity fails at " + obj_text(w, k) + ", " + obj_text(w, l) + ", " + obj_text(w, m));
  };
  if (assoc_total <= opts.exhaustive_limit) {
    for (const auto& t : triples)
      for (std::uint32_t a = 0; a < size(t[0]); ++a)
        for (std::uint32_t b = 0; b < size(t[1]); ++b)
          for (std::uint32_t d = 0; d < size(t[2]); ++d) assoc_one(t, a, b, d);
  } else {
    rep.exhaustive = false;
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
      const auto& t = triples[uniform(triples.size())];
      if (!size(t[0]) || !size(t[1]) || !size(t[2])) continue;
      assoc_one(t, std::uint32_t(uniform(size(t[0]))), std::uint32_t(uniform(size(t[1]))),
                std::uint32_t(uniform(size(t[2]))));
    }
  }

  // Naturality of mult in both variables.
  std::uint64_t nat_total = 0;
  for (MorId f = 0; f < c.morphism_count(); ++f)
    for (MorId g = 0; g < c.morphism_count(); ++g)
      if (has_mult(c.cod(f), c.cod(g))) nat_total += std::uint64_t(size(c.dom(f))) * size(c.dom(g));
  auto nat_one = [&](MorId f, MorId g, std::uint32_t a, std::uint32_t b) {
    ++rep.instances_checked;
    const MorId fg = *w.product_morphism(f, g);
    const auto lhs = act(fg, mult(c.dom(f), a, c.dom(g), b));
    const auto rhs = mult(c.cod(f), act(f, a), c.cod(g), act(g, b));
    if (lhs != rhs) report("mult is not natural at " + c.morphism_label(f) + " x " + c.morphism_label(g));
  };
  if (nat_total <= opts.exhaustive_limit) {
    for (MorId f = 0; f < c.morphism_count(); ++f)
      for (MorId g = 0; g < c.morphism_count(); ++g) {
        if (!has_mult(c.cod(f), c.cod(g))) continue;
        for (std::uint32_t a = 0; a < size(c.dom(f)); ++a)
          for (std::uint32_t b = 0; b < size(c.dom(g)); ++b) nat_one(f, g, a, b);
      }
  } else {
    rep.exhaustive = false;
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
      const MorId f = MorId(uniform(c.morphism_count())), g = MorId(uniform(c.morphism_count()));
      if (!has_mult(c.cod(f), c.cod(g)) || !size(c.dom(f)) || !size(c.dom(g))) continue;
      nat_one(f, g, std::uint32_t(uniform(size(c.dom(f)))), std::uint32_t(uniform(size(c.dom(g)))));
    }
  }

  // Twisted commutativity.
  for (ObjId k = 0; k < objects_; ++k)
    for (ObjId l = 0; l < objects_; ++l) {
      if (!has_mult(k, l)) continue;
      const MorId chi = w.symmetry(k, l);
      for (std::uint32_t a = 0; a < size(k); ++a)
        for (std::uint32_t b = 0; b < size(l); ++b) {
          ++rep.instances_checked;
          if (act(chi, mult(k, a, l, b)) != mult(l, b, k, a))
            report("twisted commutativity fails at " + obj_text(w, k) + " x " + obj_text(w, l));
        }
    }
  return rep;
}

TabulatedMonoid terminal_monoid(std::shared_ptr<const PermutativeWindow> window) {
  const auto& c = window->category();
  const std::size_t n = window->object_count();
  std::vector<std::vector<std::uint32_t>> action(c.morphism_count(), std::vector<std::uint32_t>{0});
  std::vector<std::vector<std::uint32_t>> mult(n * n);
  for (ObjId k = 0; k < n; ++k)
    for (ObjId l = 0; l < n; ++l)
      if (window->product(k, l)) mult[k * n + l] = {0};
  return TabulatedMonoid(window, std::vector<std::uint32_t>(n, 1), std::move(action), std::move(mult), 0);
}

TabulatedMonoid unit_monoid(std::shared_ptr<const PermutativeWindow> window) {
  return build_orbit_monoid({0, 0}, 0, std::move(window)).monoid;
}

FreeMonoid free_monoid(KObject g, std::shared_ptr<const PermutativeWindow> window) {
  if (window->kind() != IndexKind::J) g.m2 = 0;
  require_input(g.m1 > 0 || g.m2 > 0, "free_monoid: the generator must be a nonzero object");
  require_input(window->contains(g), "free_monoid: window too small to contain the generator " +
                                         g.to_string(window->kind()));
  unsigned p = 0;
  while (window->contains(power(g, p + 1))) ++p;
  auto out = build_orbit_monoid(g, p, std::move(window));
  if (g.m1 == 0)
    out.warnings.push_back("generator has m1 = 0: the components are not classifying spaces of symmetric groups");
  return out;
}

// ------------------------------------------------------------------- box

BoxProduct boxtimes(const TabulatedMonoid& A, const TabulatedMonoid& B) {
  require_input(A.window_ptr() == B.window_ptr() ||
                    (A.window().kind() == B.window().kind() && A.window().bound1() == B.window().bound1() &&
                     A.window().bound2() == B.window().bound2()),
                "boxtimes: the monoids live on different windows");
  const auto window = A.window_ptr();
  const auto& w = *window;
  const auto& c = w.category();
  const std::size_t n = w.object_count();

  struct Block {
    ObjId k1, k2, m;
    std::uint64_t offset;
  };
  // per target object k: blocks (k1, k2) with k1 ⊞ k2 = m and Hom(m, k)
  std::vector<std::vector<Block>> blocks(n);
  std::vector<std::vector<std::int64_t>> block_of(n, std::vector<std::int64_t>(n * n, -1));
  std::vector<std::uint64_t> tuples(n, 0);
  for (ObjId k = 0; k < n; ++k)
    for (ObjId k1 = 0; k1 < n; ++k1)
      for (ObjId k2 = 0; k2 < n; ++k2) {
        const auto m = w.product(k1, k2);
        if (!m || !A.size(k1) || !B.size(k2) || !w.hom_size(*m, k)) continue;
        block_of[k][k1 * n + k2] = static_cast<std::int64_t>(blocks[k].size());
        blocks[k].push_back({k1, k2, *m, tuples[k]});
        tuples[k] += w.hom_size(*m, k) * A.size(k1) * B.size(k2);
      }
  for (ObjId k = 0; k < n; ++k)
    if (tuples[k] >= UINT32_MAX) throw WindowError("boxtimes: too many decompositions at " + obj_text(w, k));

  auto tuple_id = [&](ObjId k, ObjId k1, ObjId k2, MorId f, std::uint32_t a, std::uint32_t b) {
    const auto bi = block_of[k][k1 * n + k2];
    require_internal(bi >= 0, "boxtimes: missing decomposition block");
    const Block& bl = blocks[k][bi];
    return static_cast<std::uint32_t>(bl.offset +
                                      ((f - w.hom_begin(bl.m, k)) * A.size(k1) + a) * B.size(k2) + b);
  };

  BoxProduct out{terminal_monoid(window), {}};
  std::vector<std::vector<std::uint32_t>> cls(n);
  std::vector<std::uint32_t> sizes(n);
  out.representative.resize(n);
  for (ObjId k = 0; k < n; ++k) {
    UnionFind uf(tuples[k]);
    for (const Block& bl : blocks[k]) {
      // relations along g1: k1 -> bl.k1 (second factor fixed) and g2: k2 -> bl.k2
      for (MorId f = w.hom_begin(bl.m, k); f < w.hom_begin(bl.m, k) + w.hom_size(bl.m, k); ++f) {
        for (MorId g1 : c.in(bl.k1)) {
          if (c.is_identity(g1)) continue;
          const ObjId k1 = c.dom(g1);
          if (!A.size(k1)) continue;
          const MorId fg = c.compose(f, *w.product_morphism(g1, c.identity(bl.k2)));
          for (std::uint32_t a = 0; a < A.size(k1); ++a)
            for (std::uint32_t b = 0; b < B.size(bl.k2); ++b)
              uf.unite(tuple_id(k, k1, bl.k2, fg, a, b), tuple_id(k, bl.k1, bl.k2, f, A.act(g1, a), b));
        }
        for (MorId g2 : c.in(bl.k2)) {
          if (c.is_identity(g2)) continue;
          const ObjId k2 = c.dom(g2);
          if (!B.size(k2)) continue;
          const MorId fg = c.compose(f, *w.product_morphism(c.identity(bl.k1), g2));
          for (std::uint32_t a = 0; a < A.size(bl.k1); ++a)
            for (std::uint32_t b = 0; b < B.size(k2); ++b)
              uf.unite(tuple_id(k, bl.k1, k2, fg, a, b), tuple_id(k, bl.k1, bl.k2, f, a, B.act(g2, b)));
        }
      }
    }
    cls[k] = uf.labels(&sizes[k]);
    out.representative[k].resize(sizes[k]);
    std::vector<bool> seen(sizes[k], false);
    for (const Block& bl : blocks[k]) {
      std::uint64_t t = bl.offset;
      for (MorId f = w.hom_begin(bl.m, k); f < w.hom_begin(bl.m, k) + w.hom_size(bl.m, k); ++f)
        for (std::uint32_t a = 0; a < A.size(bl.k1); ++a)
          for (std::uint32_t b = 0; b < B.size(bl.k2); ++b, ++t) {
            const auto x = cls[k][t];
            if (seen[x]) continue;
            seen[x] = true;
            out.representative[k][x] = {bl.k1, bl.k2, f, a, b};
          }
    }
  }

  std::vector<std::vector<std::uint32_t>> action(c.morphism_count());
  const auto morphisms = static_cast<std::int64_t>(c.morphism_count());
#pragma omp parallel for schedule(dynamic, 64) num_threads(num_threads())
  for (std::int64_t h = 0; h < morphisms; ++h) {
    const ObjId k = c.dom(h), k2 = c.cod(h);
    for (const auto& r : out.representative[k])
      action[h].push_back(cls[k2][tuple_id(k2, r.k1, r.k2, c.compose(h, r.f), r.a, r.b)]);
  }
  std::vector<std::vector<std::uint32_t>> mult(n * n);
  for (ObjId k = 0; k < n; ++k)
    for (ObjId l = 0; l < n; ++l) {
      const auto kl = w.product(k, l);
      if (!kl) continue;
      for (const auto& r : out.representative[k])
        for (const auto& s : out.representative[l]) {
          const ObjId n1 = *w.product(r.k1, s.k1), n2 = *w.product(r.k2, s.k2);
          const KObject x1 = w.object(r.k1), x2 = w.object(r.k2), y1 = w.object(s.k1), y2 = w.object(s.k2);
          const IndexKind kind = w.kind();
          const KMorphism mid =
              k_product(kind, k_product(kind, k_identity(kind, x1), k_symmetry(kind, y1, x2)), k_identity(kind, y2));
          const MorId f = c.compose(*w.product_morphism(r.f, s.f), w.morphism_id(mid));
          mult[k * n + l].push_back(
              cls[*kl][tuple_id(*kl, n1, n2, f, A.mult(r.k1, r.a, s.k1, s.a), B.mult(r.k2, r.b, s.k2, s.b))]);
        }
    }
  const ObjId e = w.unit();
  const std::uint32_t unit = cls[e][tuple_id(e, e, e, c.identity(e), A.unit(), B.unit())];
  out.monoid = TabulatedMonoid(window, std::move(sizes), std::move(action), std::move(mult), unit);
  return out;
}

// ------------------------------------------------------------ presentations

nlohmann::json FPCommMonoid::to_json() const {
  nlohmann::json j;
  j["generators"] = generators;
  j["relations"] = nlohmann::json::array();
  for (const auto& [l, r] : relations) j["relations"].push_back({l, r});
  return j;
}

std::string to_string(UnitStatus s) {
  switch (s) {
    case UnitStatus::unit: return "UNIT";
    case UnitStatus::not_unit: return "NOT_UNIT";
    case UnitStatus::unknown: return "UNKNOWN";
  }
  return "?";
}

std::vector<UnitReport> presentation_units(const FPCommMonoid& m, std::size_t max_word_length) {
  const std::size_t g = m.generators.size();
  for (const auto& [l, r] : m.relations)
    require_input(l.size() == g && r.size() == g, "presentation: relation vectors must have one entry per generator");
  std::vector<UnitReport> out(g);
  std::vector<bool> decided(g, false);
  using Word = std::vector<unsigned>;
  auto length = [](const Word& w) {
    std::size_t s = 0;
    for (auto x : w) s += x;
    return s;
  };
  std::set<Word> seen{Word(g, 0)};
  std::deque<Word> queue{Word(g, 0)};
  bool pruned = false;
  while (!queue.empty()) {
    const Word w = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < g; ++i)
      if (w[i] > 0 && !decided[i]) {
        decided[i] = true;
        out[i].status = UnitStatus::unit;
        Word rest = w;
        --rest[i];
        for (std::size_t j = 0; j < g; ++j)
          for (unsigned t = 0; t < rest[j]; ++t) out[i].certificate.push_back(static_cast<std::uint32_t>(j));
      }
    for (const auto& [l, r] : m.relations)
      for (int dir = 0; dir < 2; ++dir) {
        const Word& from = dir ? r : l;
        const Word& to = dir ? l : r;
        bool fits = true;
        for (std::size_t i = 0; i < g && fits; ++i) fits = w[i] >= from[i];
        if (!fits) continue;
        Word next = w;
        for (std::size_t i = 0; i < g; ++i) next[i] = next[i] - from[i] + to[i];
        if (length(next) > max_word_length) {
          pruned = true;
          continue;
        }
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
  }
  for (std::size_t i = 0; i < g; ++i)
    if (!decided[i]) out[i].status = pruned ? UnitStatus::unknown : UnitStatus::not_unit;
  return out;
}

// ---------------------------------------------------------------- π₀

Pi0Monoid pi0_hocolim(const TabulatedMonoid& A) {
  const auto& w = A.window();
  const auto& c = w.category();
  const std::size_t n = w.object_count();
  std::vector<std::uint64_t> offset(n + 1, 0);
  for (ObjId k = 0; k < n; ++k) offset[k + 1] = offset[k] + A.size(k);
  require_input(offset[n] < UINT32_MAX, "pi0_hocolim: too many elements");
  UnionFind uf(offset[n]);
  for (MorId f = 0; f < c.morphism_count(); ++f)
    for (std::uint32_t a = 0; a < A.size(c.dom(f)); ++a)
      uf.unite(std::uint32_t(offset[c.dom(f)] + a), std::uint32_t(offset[c.cod(f)] + A.act(f, a)));
  Pi0Monoid m;
  std::uint32_t count = 0;
  m.component = uf.labels(&count);
  m.size = count;
  m.representative.resize(count);
  m.labels.resize(count);
  std::vector<bool> seen(count, false);
  for (ObjId k = 0; k < n; ++k)
    for (std::uint32_t a = 0; a < A.size(k); ++a) {
      const auto x = m.component[offset[k] + a];
      if (seen[x]) continue;
      seen[x] = true;
      m.representative[x] = {k, a};
      m.labels[x] = obj_text(w, k) + ":" + A.element_label(k, a);
    }
  m.unit = m.component[offset[w.unit()] + A.unit()];
  m.table.assign(std::size_t(count) * count, -1);
  for (ObjId k = 0; k < n; ++k)
    for (ObjId l = 0; l < n; ++l) {
      if (!A.has_mult(k, l)) continue;
      const ObjId kl = A.product(k, l);
      for (std::uint32_t a = 0; a < A.size(k); ++a)
        for (std::uint32_t b = 0; b < A.size(l); ++b) {
          const auto x = m.component[offset[k] + a], y = m.component[offset[l] + b];
          const auto z = m.component[offset[kl] + A.mult(k, a, l, b)];
          auto& t = m.table[x * count + y];
          if (t >= 0 && t != z)
            throw InternalError("pi0_hocolim: product of classes " + m.labels[x] + " and " + m.labels[y] +
                                " is not well defined");
          t = z;
          ++m.pairs_checked;
        }
    }
  m.window_diameter = w.bound1() + w.bound2();
  return m;
}

FPCommMonoid Pi0Monoid::presentation() const {
  FPCommMonoid p;
  p.generators = labels;
  auto e = [&](std::initializer_list<std::uint32_t> xs) {
    std::vector<unsigned> v(size, 0);
    for (auto x : xs) ++v[x];
    return v;
  };
  p.relations.push_back({e({unit}), e({})});
  for (std::uint32_t x = 0; x < size; ++x)
    for (std::uint32_t y = x; y < size; ++y)
      if (auto z = multiply(x, y)) p.relations.push_back({e({x, y}), e({*z})});
  return p;
}

nlohmann::json Pi0Monoid::to_json() const {
  nlohmann::json j;
  j["size"] = size;
  j["classes"] = labels;
  j["unit"] = unit;
  nlohmann::json rows = nlohmann::json::array();
  for (std::uint32_t x = 0; x < size; ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (std::uint32_t y = 0; y < size; ++y) row.push_back(table[x * size + y]);
    rows.push_back(row);
  }
  j["table"] = rows;
  return j;
}

std::vector<UnitReport> unit_status(const Pi0Monoid& m, std::size_t bound) {
  if (bound == 0) bound = std::max<std::size_t>(1, 2 * m.window_diameter);
  std::vector<UnitReport> out(m.size);
  for (std::uint32_t x = 0; x < m.size; ++x) {
    if (x == m.unit) {
      out[x].status = UnitStatus::unit;
      continue;
    }
    // BFS over left-associated products x * y1 * ... * yr
    std::vector<std::int64_t> parent(m.size, -2), via(m.size, -1);
    parent[x] = -1;
    std::vector<std::uint32_t> frontier{x};
    bool found = false, cut = false;
    for (std::size_t depth = 0; !frontier.empty() && !found; ++depth) {
      std::vector<std::uint32_t> next;
      for (auto u : frontier)
        for (std::uint32_t y = 0; y < m.size && !found; ++y) {
          const auto z = m.multiply(u, y);
          if (!z || parent[*z] != -2) continue;
          if (depth + 1 > bound) {
            cut = true;
            continue;
          }
          parent[*z] = u;
          via[*z] = y;
          next.push_back(*z);
          found = *z == m.unit;
        }
      frontier = std::move(next);
    }
    if (found) {
      out[x].status = UnitStatus::unit;
      for (std::int64_t v = m.unit; v != x; v = parent[v]) out[x].certificate.push_back(std::uint32_t(via[v]));
      std::reverse(out[x].certificate.begin(), out[x].certificate.end());
    } else {
      out[x].status = cut ? UnitStatus::unknown : UnitStatus::not_unit;
    }
  }
  return out;
}

UnitsSubmonoid units_submonoid(const TabulatedMonoid& A, std::size_t bound) {
  const auto pi0 = pi0_hocolim(A);
  UnitsSubmonoid out{terminal_monoid(A.window_ptr()), {}, unit_status(pi0, bound)};
  const auto& w = A.window();
  const auto& c = w.category();
  const std::size_t n = w.object_count();
  std::vector<std::uint64_t> offset(n + 1, 0);
  for (ObjId k = 0; k < n; ++k) offset[k + 1] = offset[k] + A.size(k);
  out.old_point.resize(n);
  std::vector<std::vector<std::int64_t>> new_point(n);
  std::vector<std::uint32_t> sizes(n);
  for (ObjId k = 0; k < n; ++k) {
    new_point[k].assign(A.size(k), -1);
    for (std::uint32_t a = 0; a < A.size(k); ++a)
      if (out.status[pi0.component[offset[k] + a]].status == UnitStatus::unit) {
        new_point[k][a] = static_cast<std::int64_t>(out.old_point[k].size());
        out.old_point[k].push_back(a);
      }
    sizes[k] = static_cast<std::uint32_t>(out.old_point[k].size());
  }
  std::vector<std::vector<std::uint32_t>> action(c.morphism_count());
  for (MorId f = 0; f < c.morphism_count(); ++f)
    for (auto a : out.old_point[c.dom(f)]) {
      const auto v = new_point[c.cod(f)][A.act(f, a)];
      require_internal(v >= 0, "units_submonoid: not closed under the action");
      action[f].push_back(std::uint32_t(v));
    }
  std::vector<std::vector<std::uint32_t>> mult(n * n);
  for (ObjId k = 0; k < n; ++k)
    for (ObjId l = 0; l < n; ++l) {
      if (!A.has_mult(k, l)) continue;
      for (auto a : out.old_point[k])
        for (auto b : out.old_point[l]) {
          const auto v = new_point[A.product(k, l)][A.mult(k, a, l, b)];
          require_internal(v >= 0, "units_submonoid: not closed under multiplication");
          mult[k * n + l].push_back(std::uint32_t(v));
        }
    }
  const auto unit = new_point[w.unit()][A.unit()];
  require_internal(unit >= 0, "units_submonoid: the unit is not a unit");
  out.monoid = TabulatedMonoid(A.window_ptr(), std::move(sizes), std::move(action), std::move(mult), std::uint32_t(unit));
  return out;
}

GrouplikeReport grouplike_check(const Pi0Monoid& m, std::size_t bound) {
  GrouplikeReport r;
  const auto status = unit_status(m, bound);
  r.grouplike = true;
  for (std::uint32_t x = 0; x < m.size; ++x) {
    if (status[x].status != UnitStatus::unit) {
      if (r.grouplike) {
        r.first_failure = x;
        r.failure_status = status[x].status;
      }
      r.grouplike = false;
      continue;
    }
    for (std::uint32_t y = 0; y < m.size; ++y)
      if (m.multiply(x, y) == m.unit) {
        r.inverses.emplace_back(x, y);
        break;
      }
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> image;
  for (std::uint32_t x = 0; x < m.size; ++x)
    for (std::uint32_t y = 0; y < m.size; ++y)
      if (auto z = m.multiply(x, y)) {
        ++r.shear_domain;
        image.insert({x, *z});
      }
  r.shear_image = image.size();
  r.grid = std::uint64_t(m.size) * m.size;
  r.shear_injective = r.shear_image == r.shear_domain;
  return r;
}

nlohmann::json GrouplikeReport::to_json() const {
  nlohmann::json j;
  j["grouplike"] = grouplike;
  j["inverses"] = inverses;
  if (first_failure) {
    j["first_failure"] = *first_failure;
    j["failure_status"] = to_string(failure_status);
  }
  j["shear"] = {{"domain", shear_domain}, {"image", shear_image}, {"grid", grid}, {"injective", shear_injective}};
  return j;
}

DegreeMap degree_homomorphism(const TabulatedMonoid& A, const Pi0Monoid& m) {
  const auto& w = A.window();
  require_input(w.kind() == IndexKind::J, "degree_homomorphism: the monoid must live on a window of J");
  DegreeMap d;
  std::vector<bool> set(m.size, false);
  d.degree.assign(m.size, 0);
  std::uint64_t e = 0;
  for (ObjId k = 0; k < w.object_count(); ++k)
    for (std::uint32_t a = 0; a < A.size(k); ++a, ++e) {
      const auto x = m.component[e];
      if (set[x] && d.degree[x] != w.degree(k))
        throw InternalError("degree_homomorphism: class " + m.labels[x] + " spans two degrees");
      set[x] = true;
      d.degree[x] = w.degree(k);
    }
  for (std::uint32_t x = 0; x < m.size; ++x)
    for (std::uint32_t y = 0; y < m.size; ++y)
      if (auto z = m.multiply(x, y)) {
        ++d.products_checked;
        if (d.degree[*z] != d.degree[x] + d.degree[y]) d.additive = false;
      }
  return d;
}

TabulatedMonoid restrict_along_delta(const TabulatedMonoid& A) {
  const auto& wj = A.window();
  require_input(wj.kind() == IndexKind::J, "restrict_along_delta: the monoid must live on a window of J");
  const unsigned b = std::min(wj.bound1(), wj.bound2());
  auto wi = PermutativeWindow::make(IndexKind::I, b);
  const auto& ci = wi->category();
  const std::size_t n = wi->object_count();
  auto diag = [&](ObjId m) { return wj.object_id({m, m}); };
  std::vector<std::uint32_t> sizes(n);
  for (ObjId m = 0; m < n; ++m) sizes[m] = A.size(diag(m));
  std::vector<std::vector<std::uint32_t>> action(ci.morphism_count());
  for (MorId f = 0; f < ci.morphism_count(); ++f) {
    const auto& a = wi->morphism(f);
    KMorphism j{a.beta1, a.beta1, {}};
    for (unsigned x : complement(a.beta1)) j.sigma.push_back(static_cast<std::uint8_t>(x));
    action[f] = A.diagram().action(wj.morphism_id(j));
  }
  std::vector<std::vector<std::uint32_t>> mult(n * n);
  for (ObjId k = 0; k < n; ++k)
    for (ObjId l = 0; l < n; ++l)
      if (wi->product(k, l)) mult[k * n + l] = A.mult_table(diag(k), diag(l));
  return TabulatedMonoid(wi, std::move(sizes), std::move(action), std::move(mult), A.unit());
}

// ------------------------------------------------------------------ JSON

nlohmann::json to_json(const TabulatedMonoid& A) {
  const auto& w = A.window();
  const auto& c = w.category();
  nlohmann::json j;
  j["schema"] = "glj.monoid/1";
  j["category"] = to_string(w.kind());
  j["bound"] = {w.bound1(), w.bound2()};
  j["values"] = nlohmann::json::array();
  for (ObjId k = 0; k < w.object_count(); ++k)
    if (A.size(k)) j["values"].push_back({{"object", {w.object(k).m1, w.object(k).m2}}, {"size", A.size(k)}});
  j["action"] = nlohmann::json::array();
  for (MorId f = 0; f < c.morphism_count(); ++f)
    if (A.size(c.dom(f)) && !c.is_identity(f))
      j["action"].push_back({{"morphism", to_json(w.morphism(f))}, {"map", A.diagram().action(f)}});
  j["mult"] = nlohmann::json::array();
  for (ObjId k = 0; k < w.object_count(); ++k)
    for (ObjId l = 0; l < w.object_count(); ++l)
      if (A.has_mult(k, l) && !A.mult_table(k, l).empty()) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::uint32_t a = 0; a < A.size(k); ++a) {
          const auto& t = A.mult_table(k, l);
          rows.push_back(std::vector<std::uint32_t>(t.begin() + a * A.size(l), t.begin() + (a + 1) * A.size(l)));
        }
        j["mult"].push_back({{"left", {w.object(k).m1, w.object(k).m2}},
                             {"right", {w.object(l).m1, w.object(l).m2}},
                             {"table", rows}});
      }
  j["unit"] = A.unit();
  return j;
}

TabulatedMonoid monoid_from_json(const nlohmann::json& j) {
  try {
    require_input(j.value("schema", "") == "glj.monoid/1", "monoid JSON: schema must be glj.monoid/1");
    const IndexKind kind = parse_index_kind(j.at("category").get<std::string>());
    const auto bound = j.at("bound").get<std::vector<unsigned>>();
    require_input(bound.size() == 2 || (bound.size() == 1 && kind != IndexKind::J), "monoid JSON: bad bound");
    auto window = std::make_shared<const PermutativeWindow>(kind, bound[0], bound.size() > 1 ? bound[1] : 0);
    const auto& w = *window;
    const auto& c = w.category();
    const std::size_t n = w.object_count();
    auto object = [&](const nlohmann::json& o) {
      const auto v = o.get<std::vector<unsigned>>();
      require_input(!v.empty() && v.size() <= 2, "monoid JSON: bad object");
      return w.object_id({v[0], v.size() > 1 ? v[1] : 0u});
    };
    std::vector<std::uint32_t> sizes(n, 0);
    for (const auto& v : j.at("values")) sizes[object(v.at("object"))] = v.at("size").get<std::uint32_t>();

    std::vector<std::vector<std::uint32_t>> action(c.morphism_count());
    std::vector<bool> given(c.morphism_count(), false);
    for (const auto& a : j.value("action", nlohmann::json::array())) {
      const MorId f = w.morphism_id(kmorphism_from_json(kind, a.at("morphism")));
      if (given[f]) throw InputError("monoid JSON: action given twice for " + c.morphism_label(f));
      given[f] = true;
      action[f] = a.at("map").get<std::vector<std::uint32_t>>();
    }
    for (MorId f = 0; f < c.morphism_count(); ++f) {
      if (given[f]) continue;
      const auto s = sizes[c.dom(f)];
      if (c.is_identity(f)) {
        for (std::uint32_t a = 0; a < s; ++a) action[f].push_back(a);
      } else if (s > 0) {
        if (sizes[c.cod(f)] != 1) throw InputError("monoid JSON: missing action for " + c.morphism_label(f));
        action[f].assign(s, 0);
      }
    }
    std::vector<std::vector<std::uint32_t>> mult(n * n);
    std::vector<bool> mgiven(n * n, false);
    for (const auto& m : j.value("mult", nlohmann::json::array())) {
      const ObjId k = object(m.at("left")), l = object(m.at("right"));
      require_input(w.product(k, l).has_value(), "monoid JSON: mult given for a product outside the window");
      require_input(!mgiven[k * n + l], "monoid JSON: mult given twice");
      mgiven[k * n + l] = true;
      for (const auto& row : m.at("table"))
        for (auto v : row.get<std::vector<std::uint32_t>>()) mult[k * n + l].push_back(v);
    }
    for (ObjId k = 0; k < n; ++k)
      for (ObjId l = 0; l < n; ++l) {
        const auto p = w.product(k, l);
        if (!p || mgiven[k * n + l] || !sizes[k] || !sizes[l]) continue;
        require_input(sizes[*p] == 1, "monoid JSON: missing mult table for " + obj_text(w, k) + " x " + obj_text(w, l));
        mult[k * n + l].assign(std::size_t(sizes[k]) * sizes[l], 0);
      }
    return TabulatedMonoid(window, std::move(sizes), std::move(action), std::move(mult), j.at("unit").get<std::uint32_t>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("monoid JSON: ") + e.what());
  }
}

std::vector<AbelianGroup> hocolim_h1(const TabulatedMonoid& a, const Pi0Monoid& m, Exec exec) {
  require_input(a.window().kind() != IndexKind::I, "hocolim_h1: over I not every endomorphism is invertible");
  const auto el = a.elements();
  const auto& base = a.window().category();
  std::vector<bool> isos(el.category.morphism_count());
  for (MorId e = 0; e < isos.size(); ++e) {
    const MorId g = (*el.base_morphism)[e];
    isos[e] = base.dom(g) == base.cod(g);
  }
  std::vector<AbelianGroup> out;
  for (std::uint32_t c = 0; c < m.size; ++c) {
    const auto [k, p] = m.representative[c];
    out.push_back(category_h1(el.category, el.element(k, p), isos, exec));
  }
  return out;
}

}  // namespace glj
