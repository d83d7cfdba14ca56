// One line per acceptance criterion: PASS/FAIL, measured time, budget.
// Exit status is the number of failing criteria.

#include "corpus.hpp"
#include "glj/catcore.hpp"
#include "glj/gammacat.hpp"
#include "glj/gl1.hpp"
#include "glj/jmonoid.hpp"
#include "glj/permcat.hpp"
#include "glj/topo.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

using namespace glj;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Checker {
 public:
  explicit Checker(Outcome& o) : o_(o) {}
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (o_.ok) o_.detail = "failed: " + what;
      o_.ok = false;
    }
  }
  void note(const std::string& s) {
    if (o_.ok) o_.detail += (o_.detail.empty() ? "" : "; ") + s;
  }

 private:
  Outcome& o_;
};

int failures = 0;

void criterion(int id, const char* title, double budget, const std::function<void(Checker&)>& body) {
  Outcome o;
  Checker ch(o);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(ch);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (o.ok && secs > budget) {
    o.ok = false;
    o.detail = "over the time budget; " + o.detail;
  }
  failures += !o.ok;
  std::printf("[%s] %2d  %s  (%.2f s, budget %.0f s)  %s\n", o.ok ? "PASS" : "FAIL", id, title, secs, budget,
              o.detail.c_str());
  std::fflush(stdout);
}

std::uint64_t factorial(unsigned n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::shared_ptr<const PermutativeWindow> jwin(unsigned b1, unsigned b2) {
  return std::make_shared<const PermutativeWindow>(IndexKind::J, b1, b2);
}

HKOptions product_mode() {
  HKOptions o;
  o.mode = HKMode::product;
  return o;
}

GradedUnitGroup units(const char* text) { return GradedUnitGroup::from_json(nlohmann::json::parse(text)); }

}  // namespace

int main() {
  criterion(1, "J hom-set closed formula, coordinates <= 3", 10, [](Checker& c) {
    std::size_t checked = 0;
    for (unsigned m1 = 0; m1 <= 3; ++m1)
      for (unsigned m2 = 0; m2 <= 3; ++m2)
        for (unsigned n1 = 0; n1 <= 3; ++n1)
          for (unsigned n2 = 0; n2 <= 3; ++n2) {
            // injections m_i -> n_i and a bijection between the complements
            std::uint64_t formula = 0;
            if (int(m2) - int(m1) == int(n2) - int(n1) && m1 <= n1)
              formula = factorial(n1) * factorial(n2) / factorial(n1 - m1);
            const auto listed = j_homset({m1, m2}, {n1, n2}).size();
            c.expect(listed == formula, "|J((" + std::to_string(m1) + "," + std::to_string(m2) + "),(" +
                                            std::to_string(n1) + "," + std::to_string(n2) + "))|");
            if (int(m2) - int(m1) != int(n2) - int(n1)) c.expect(listed == 0, "hom-set across degrees");
            ++checked;
          }
    c.note(std::to_string(checked) + " hom-sets");
  });

  criterion(2, "category axioms: J<=2 exhaustive, J<=3 sampled 10^4 triples", 60, [](Checker& c) {
    const auto r2 = validate(PermutativeWindow::make(IndexKind::J, 2)->category());
    c.expect(r2.exhaustive && r2.ok(), "J<=2 exhaustive validation");
    ValidateOptions o;
    o.force_sampling = true;
    o.sample_triples = 10'000;
    o.seed = 20261015;
    const auto r3 = validate(PermutativeWindow::make(IndexKind::J, 3)->category(), o);
    c.expect(!r3.exhaustive && r3.triples_checked >= 10'000 && r3.violation_count == 0, "J<=3 sampled validation");
    c.note("J<=2: " + std::to_string(r2.triples_checked) + " triples; J<=3: " + std::to_string(r3.triples_checked) +
           " sampled, 0 failures");
  });

  criterion(3, "components of nerve(J<=N) are the degrees -N..N, N = 2,3,4", 60, [](Checker& c) {
    for (unsigned n = 2; n <= 4; ++n) {
      const auto w = PermutativeWindow::make(IndexKind::J, n);
      std::size_t count = 0;
      const auto comp = components(nerve(w->category(), 1).sset, &count);
      std::map<std::uint32_t, std::set<int>> degrees;
      for (ObjId x = 0; x < w->object_count(); ++x) degrees[comp[x]].insert(w->degree(x));
      std::set<int> seen;
      bool single = true;
      for (const auto& [k, d] : degrees) single = single && d.size() == 1, seen.insert(*d.begin());
      std::set<int> expect;
      for (int d = -int(n); d <= int(n); ++d) expect.insert(d);
      c.expect(count == 2 * n + 1 && single && seen == expect, "N = " + std::to_string(n));
    }
    c.note("7, 9, 11 components");
  });

  criterion(4, "H1 of the degree-0 component of nerve(J<=N) is Z/2, N = 3,4", 600, [](Checker& c) {
    for (unsigned n = 3; n <= 4; ++n) {
      const auto w = PermutativeWindow::make(IndexKind::J, n);
      const auto x = restrict_to_component(nerve(w->category(), 2).sset, w->object_id({0, 0}));
      const auto h = homology(x.sset, 1);
      c.expect(h.to_string() == "Z/2", "N = " + std::to_string(n) + " gave " + h.to_string());
      c.note("N=" + std::to_string(n) + ": " + h.to_string() + " (" + std::to_string(x.sset.count(2)) + " 2-simplices)");
    }
  });

  criterion(5, "HK(S) axioms (i)-(iv), evaluation full and essentially surjective", 60, [](Checker& c) {
    for (auto kind : {IndexKind::Sigma, IndexKind::J})
      for (unsigned k = 0; k <= 2; ++k) {
        const auto w = PermutativeWindow::make(kind, 2);
        const HKCategory hk(w, k, product_mode());
        const auto ax = hk.check_axioms();
        const auto ev = check_evaluation(hk);
        const std::string tag = to_string(kind) + "<=2, " + std::to_string(k) + "+";
        c.expect(ax.ok(), tag + " axioms");
        c.expect(ev.full, tag + " full");
        c.expect(ev.essentially_surjective, tag + " essentially surjective");
        if (k == 2) c.note(tag + ": " + std::to_string(hk.object_count()) + " objects");
      }
  });

  criterion(6, "pi0 b(J<=2)(2+) -> pi0 b(J<=2)(1+)^2 injective onto the interior grid", 60, [](Checker& c) {
    const auto r = bgamma_specialness(PermutativeWindow::make(IndexKind::J, 2));
    c.expect(r.well_defined && r.injective, "well defined and injective");
    // degree pairs realizable by an object of J<=2 split as a sum of two
    std::set<std::pair<int, int>> expect, got, missing;
    for (int d1 = -2; d1 <= 2; ++d1)
      for (int d2 = -2; d2 <= 2; ++d2)
        if (std::max(d1, 0) + std::max(d2, 0) <= 2 && std::max(-d1, 0) + std::max(-d2, 0) <= 2) expect.insert({d1, d2});
    for (auto [a, b] : r.image) got.insert({r.degrees[a], r.degrees[b]});
    for (auto [a, b] : r.missing) missing.insert({r.degrees[a], r.degrees[b]});
    c.expect(got == expect && got.size() == 19, "image is the 19 realizable pairs");
    bool interior = true;
    for (int d1 = -1; d1 <= 1; ++d1)
      for (int d2 = -1; d2 <= 1; ++d2) interior = interior && got.count({d1, d2});
    c.expect(interior && r.interior_covered, "interior [-1,1]^2 covered");
    std::string b;
    for (auto [x, y] : missing) b += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    c.note("19 pairs; boundary not reached: " + b);
  });

  criterion(7, "free((1,2)) on J<=(3,5): H1 = Z/2 at p = 2, trivial at p <= 1", 300, [](Checker& c) {
    const auto f = free_monoid({1, 2}, jwin(3, 5));
    const auto m = pi0_hocolim(f.monoid);
    const auto h = hocolim_h1(f.monoid, m);
    c.expect(f.max_length == 2 && m.size == 3, "three components p = 0, 1, 2");
    // abelianized π₁ on a skeleton of each component, as a second route
    const auto el = f.monoid.elements();
    const auto& base = f.monoid.window().category();
    std::vector<bool> isos(el.category.morphism_count());
    for (MorId e = 0; e < isos.size(); ++e) isos[e] = base.dom((*el.base_morphism)[e]) == base.cod((*el.base_morphism)[e]);
    const auto comp = object_components(el.category);
    for (std::uint32_t cl = 0; cl < m.size; ++cl) {
      const auto [k, pt] = m.representative[cl];
      const unsigned p = f.length[k][pt];
      const ObjId e = el.element(k, pt);
      std::vector<ObjId> objs;
      for (ObjId x = 0; x < el.category.object_count(); ++x)
        if (comp[x] == comp[e]) objs.push_back(x);
      const auto sub = el.category.full_subcategory(objs);
      std::vector<bool> sub_isos(sub.category.morphism_count());
      for (MorId g = 0; g < sub_isos.size(); ++g) sub_isos[g] = isos[sub.parent_morphism[g]];
      const auto sk = skeleton(sub.category, sub_isos);
      const auto ab = abelianize(pi1_presentation(nerve(sk.category, 2).sset, 0).presentation);
      const std::string want = p == 2 ? "Z/2" : "0";
      c.expect(h[cl].to_string() == want && ab.to_string() == want, "p = " + std::to_string(p));
      c.note("p=" + std::to_string(p) + ": H1 " + h[cl].to_string() + ", pi1^ab " + ab.to_string());
    }
  });

  criterion(8, "degree map of free((1,2)): p -> p, additive", 10, [](Checker& c) {
    const auto f = free_monoid({1, 2}, jwin(3, 6));
    const auto m = pi0_hocolim(f.monoid);
    const auto d = degree_homomorphism(f.monoid, m);
    for (std::uint32_t cl = 0; cl < m.size; ++cl) {
      const auto [k, pt] = m.representative[cl];
      c.expect(d.degree[cl] == int(f.length[k][pt]), "class of length " + std::to_string(f.length[k][pt]));
    }
    std::size_t products = 0;
    for (std::uint32_t x = 0; x < m.size; ++x)
      for (std::uint32_t y = 0; y < m.size; ++y)
        if (auto z = m.multiply(x, y)) {
          c.expect(d.degree[*z] == d.degree[x] + d.degree[y], "additivity");
          ++products;
        }
    c.expect(d.additive, "library additivity flag");
    c.note(std::to_string(m.size) + " classes, " + std::to_string(products) + " products, " +
           std::to_string(m.pairs_checked) + " element pairs");
  });

  criterion(9, "gl1 of KU: n = 2, pi0 = pi1 = Z/2, exact, k-invariant nonzero", 1, [](Checker& c) {
    const auto g = units(R"({"generators": [{"name": "u", "degree": 2}, {"name": "t", "order": 2}], "sign": "t"})");
    const auto s = five_term(g);
    const AbelianGroup z2{0, {Integer(2)}};
    c.expect(periodicity(g) == 2, "n = 2");
    c.expect(s.pi0 == z2 && s.pi1 == z2, "pi0 and pi1");
    c.expect(s.ok(), "exactness by SNF");
    c.expect(k_invariant_nonzero(g), "k-invariant");
    const auto k = k_invariant(g, s);
    c.note("k-invariant " + k.named_class.value_or("nonzero"));
  });

  criterion(10, "sphere-like units: n = 0, pi0 = Z, Hopf image is the sign", 1, [](Checker& c) {
    const auto g = units(R"({"generators": [{"name": "t", "order": 2}], "sign": [1]})");
    const auto s = five_term(g);
    c.expect(periodicity(g) == 0, "n = 0");
    c.expect(s.pi0 == AbelianGroup{1, {}}, "pi0 = Z");
    c.expect(hopf_image(g) == std::vector<Integer>{Integer(1)} && g.word(hopf_image(g)) == "t", "Hopf image");
    c.expect(s.ok(), "exactness");
  });

  criterion(11, "H1 = abelianized pi1 on the regression corpus", 120, [](Checker& c) {
    const auto corpus = test::regression_corpus();
    c.expect(corpus.size() >= 10, "corpus size");
    for (const auto& [name, x] : corpus) {
      std::size_t comps = 0;
      components(x, &comps);
      c.expect(comps == 1, name + " is connected");
      c.expect(homology(x, 1) == abelianize(pi1_presentation(x, 0).presentation), name);
    }
    c.note(std::to_string(corpus.size()) + " complexes");
  });

  criterion(12, "structure maps along 2+ -> 1+ ignore the fiber order", 60, [](Checker& c) {
    const std::pair<KObject, std::shared_ptr<const PermutativeWindow>> cases[] = {{{1, 2}, jwin(2, 4)},
                                                                                   {{2, 3}, jwin(2, 3)}};
    for (const auto& [gen, w] : cases) {
      const auto f = free_monoid(gen, w);
      const auto g2 = gamma_value(f.monoid, 2), g1 = gamma_value(f.monoid, 1);
      const auto asc = gamma_structure_map(BasedMap::fold(2), f.monoid, g2, g1, false);
      const auto desc = gamma_structure_map(BasedMap::fold(2), f.monoid, g2, g1, true);
      const std::string tag = "free(" + gen.to_string(IndexKind::J) + ")";
      c.expect(asc.functor.object_map == desc.functor.object_map, tag + " objects");
      c.expect(asc.functor.morphism_map == desc.functor.morphism_map, tag + " morphisms");
      c.note(tag + ": " + std::to_string(g2.elements.category.morphism_count()) + " morphisms compared");
    }
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures;
}
