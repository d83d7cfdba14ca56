#include "glj/errors.hpp"
#include "glj/jmonoid.hpp"
#include "glj/topo.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace glj;

namespace {

std::shared_ptr<const PermutativeWindow> jwin(unsigned b1, unsigned b2) {
  return std::make_shared<const PermutativeWindow>(IndexKind::J, b1, b2);
}

// Orbits of Hom_J(g^p, l) under block permutations, by brute force on
// structural morphisms.
std::size_t brute_orbits(KObject g, unsigned p, KObject l) {
  std::vector<KMorphism> perms;
  for (const auto& pi : enumerate_injections(p, p)) {
    std::vector<unsigned> b1, b2;
    for (unsigned i = 1; i <= p; ++i) {
      for (unsigned j = 1; j <= g.m1; ++j) b1.push_back((pi(i) - 1) * g.m1 + j);
      for (unsigned j = 1; j <= g.m2; ++j) b2.push_back((pi(i) - 1) * g.m2 + j);
    }
    perms.push_back({Injection(p * g.m1, b1), Injection(p * g.m2, b2), {}});
  }
  std::set<std::string> seen;
  std::size_t orbits = 0;
  for (const auto& f : j_homset({g.m1 * p, g.m2 * p}, l)) {
    if (seen.count(f.to_string(IndexKind::J))) continue;
    ++orbits;
    for (const auto& pi : perms) seen.insert(j_compose(f, pi).to_string(IndexKind::J));
  }
  return orbits;
}

std::vector<std::uint32_t> classes_by_length(const FreeMonoid& f, const Pi0Monoid& m) {
  std::vector<std::uint32_t> out(f.max_length + 1, UINT32_MAX);
  std::uint64_t e = 0;
  for (ObjId k = 0; k < f.monoid.window().object_count(); ++k)
    for (std::uint32_t a = 0; a < f.monoid.size(k); ++a, ++e) {
      auto& c = out[f.length[k][a]];
      if (c == UINT32_MAX) c = m.component[e];
      REQUIRE(c == m.component[e]);
    }
  return out;
}

// Z/2 at every degree-0 object, empty elsewhere; morphisms act trivially.
TabulatedMonoid z2_at_diagonal(unsigned bound) {
  auto w = jwin(bound, bound);
  const auto& c = w->category();
  const std::size_t n = w->object_count();
  std::vector<std::uint32_t> sizes(n);
  for (ObjId k = 0; k < n; ++k) sizes[k] = w->degree(k) == 0 ? 2 : 0;
  std::vector<std::vector<std::uint32_t>> action(c.morphism_count());
  for (MorId f = 0; f < c.morphism_count(); ++f)
    if (sizes[c.dom(f)]) action[f] = {0, 1};
  std::vector<std::vector<std::uint32_t>> mult(n * n);
  for (ObjId k = 0; k < n; ++k)
    for (ObjId l = 0; l < n; ++l)
      if (w->product(k, l) && sizes[k] && sizes[l]) mult[k * n + l] = {0, 1, 1, 0};
  return TabulatedMonoid(w, sizes, action, mult, 0);
}

}  // namespace

TEST_CASE("free monoid examples") {
  const auto f = free_monoid({1, 2}, jwin(2, 4));
  const auto& w = f.monoid.window();
  CHECK(f.max_length == 2);
  CHECK(f.monoid.size(w.object_id({1, 2})) == 2);
  CHECK(f.monoid.size(w.object_id({1, 1})) == 1);
  CHECK(f.monoid.size(w.object_id({0, 0})) == 1);
  CHECK(f.monoid.size(w.object_id({2, 1})) == 0);
  CHECK(f.warnings.empty());
  CHECK(f.monoid.check().ok());
  CHECK_THROWS_AS(free_monoid({3, 3}, jwin(2, 2)), InputError);
  CHECK_THROWS_AS(free_monoid({0, 0}, jwin(2, 2)), InputError);
  CHECK(!free_monoid({0, 1}, jwin(1, 2)).warnings.empty());
}

TEST_CASE("property: free monoid values match brute-force orbit counts") {
  for (KObject g : {KObject{1, 2}, KObject{1, 1}, KObject{2, 3}}) {
    const auto f = free_monoid(g, jwin(3, 4));
    const auto& w = f.monoid.window();
    for (ObjId l = 0; l < w.object_count(); ++l) {
      std::size_t expect = 0;
      for (unsigned p = 0; p <= f.max_length; ++p) expect += brute_orbits(g, p, w.object(l));
      CHECK(f.monoid.size(l) == expect);
    }
  }
}

TEST_CASE("property: free monoids satisfy the monoid laws, twisted commutativity included") {
  for (KObject g : {KObject{1, 2}, KObject{1, 1}, KObject{2, 3}, KObject{1, 0}}) {
    const auto f = free_monoid(g, jwin(3, 3));
    const auto rep = f.monoid.check();
    CHECK(rep.exhaustive);
    CHECK(rep.ok());
  }
}

TEST_CASE("law violations are reported") {
  const auto f = free_monoid({1, 1}, jwin(2, 2));
  const auto& A = f.monoid;
  const auto& w = A.window();
  const std::size_t n = w.object_count();
  std::vector<std::uint32_t> sizes(n);
  for (ObjId k = 0; k < n; ++k) sizes[k] = A.size(k);
  std::vector<std::vector<std::uint32_t>> action, mult(n * n);
  for (MorId g = 0; g < w.category().morphism_count(); ++g) action.push_back(A.diagram().action(g));
  for (ObjId k = 0; k < n; ++k)
    for (ObjId l = 0; l < n; ++l)
      if (A.has_mult(k, l)) mult[k * n + l] = A.mult_table(k, l);
  const ObjId g = w.object_id({1, 1});
  auto& t = mult[g * n + g];
  REQUIRE(t.size() == 4);  // points p = 0, 1 at (1,1)
  const ObjId gg = w.object_id({2, 2});
  // a length-1 point is not fixed by the symmetry of (1,1) ⊞ (1,1)
  std::uint32_t x = 0;
  while (f.length[gg][x] != 1) ++x;
  t[3] = x;
  const TabulatedMonoid bad(A.window_ptr(), sizes, action, mult, A.unit());
  CHECK(!bad.check().ok());
}

TEST_CASE("pi0 of free monoids is graded by word length") {
  for (KObject g : {KObject{1, 2}, KObject{2, 3}, KObject{1, 1}}) {
    const auto f = free_monoid(g, jwin(3, 4));
    const auto m = pi0_hocolim(f.monoid);
    CHECK(m.size == f.max_length + 1);
    const auto cls = classes_by_length(f, m);
    CHECK(cls[0] == m.unit);
    for (unsigned p = 0; p <= f.max_length; ++p)
      for (unsigned q = 0; q <= f.max_length; ++q) {
        const auto z = m.multiply(cls[p], cls[q]);
        CHECK(z.has_value() == (p + q <= f.max_length));
        if (z) CHECK(*z == cls[p + q]);
      }
    const auto d = degree_homomorphism(f.monoid, m);
    CHECK(d.additive);
    for (unsigned p = 0; p <= f.max_length; ++p) CHECK(d.degree[cls[p]] == int(p) * degree(g));
  }
}

TEST_CASE("terminal monoid: degrees under truncated addition, all units") {
  for (unsigned n = 1; n <= 3; ++n) {
    const auto t = terminal_monoid(jwin(n, n));
    CHECK(t.check().ok());
    const auto m = pi0_hocolim(t);
    CHECK(m.size == 2 * n + 1);
    const auto d = degree_homomorphism(t, m);
    for (std::uint32_t x = 0; x < m.size; ++x)
      for (std::uint32_t y = 0; y < m.size; ++y) {
        const int s = d.degree[x] + d.degree[y];
        const auto z = m.multiply(x, y);
        CHECK(z.has_value() == (std::abs(s) <= int(n)));
        if (z) CHECK(d.degree[*z] == s);
      }
    const auto g = grouplike_check(m);
    CHECK(g.grouplike);
    CHECK(g.inverses.size() == m.size);
    CHECK(g.shear_injective);
    const auto u = units_submonoid(t);
    for (ObjId k = 0; k < u.monoid.window().object_count(); ++k) CHECK(u.monoid.size(k) == 1);
  }
}

TEST_CASE("free monoid on (1,2): not grouplike, units are the p = 0 part") {
  const auto f = free_monoid({1, 2}, jwin(3, 5));
  const auto m = pi0_hocolim(f.monoid);
  const auto cls = classes_by_length(f, m);
  const auto st = unit_status(m);
  CHECK(st[cls[0]].status == UnitStatus::unit);
  CHECK(st[cls[1]].status == UnitStatus::not_unit);
  CHECK(st[cls[2]].status == UnitStatus::not_unit);
  const auto g = grouplike_check(m);
  CHECK(!g.grouplike);
  REQUIRE(g.first_failure.has_value());
  CHECK(*g.first_failure == cls[1]);
  CHECK(g.shear_injective);
  const auto u = units_submonoid(f.monoid);
  CHECK(u.monoid.check().ok());
  const auto& w = f.monoid.window();
  for (ObjId k = 0; k < w.object_count(); ++k) {
    std::uint32_t expect = 0;
    for (auto p : f.length[k]) expect += p == 0;
    CHECK(u.monoid.size(k) == expect);
  }
  CHECK(grouplike_check(pi0_hocolim(u.monoid)).grouplike);
}

TEST_CASE("a finite group tabulated at degree-0 objects is grouplike") {
  const auto a = z2_at_diagonal(2);
  CHECK(a.check().ok());
  const auto m = pi0_hocolim(a);
  CHECK(m.size == 2);
  CHECK(grouplike_check(m).grouplike);
  const auto u = units_submonoid(a);
  for (ObjId k = 0; k < a.window().object_count(); ++k) CHECK(u.monoid.size(k) == a.size(k));
}

TEST_CASE("presentation units") {
  FPCommMonoid inv{{"a", "b"}, {{{1, 1}, {0, 0}}}};
  auto r = presentation_units(inv, 4);
  CHECK(r[0].status == UnitStatus::unit);
  CHECK(r[0].certificate == std::vector<std::uint32_t>{1});
  CHECK(r[1].status == UnitStatus::unit);

  FPCommMonoid idem{{"a"}, {{{2}, {1}}}};
  CHECK(presentation_units(idem, 4)[0].status == UnitStatus::not_unit);

  FPCommMonoid cube{{"b"}, {{{0}, {3}}}};
  CHECK(presentation_units(cube, 2)[0].status == UnitStatus::unknown);
  CHECK(presentation_units(cube, 3)[0].status == UnitStatus::unit);

  // the presentation of π₀ of the terminal monoid has every generator a unit
  const auto m = pi0_hocolim(terminal_monoid(jwin(2, 2)));
  for (const auto& s : presentation_units(m.presentation(), 4)) CHECK(s.status == UnitStatus::unit);
  const auto fm = pi0_hocolim(free_monoid({1, 2}, jwin(2, 4)).monoid);
  const auto fs = presentation_units(fm.presentation(), 6);
  for (std::uint32_t x = 0; x < fm.size; ++x)
    CHECK((fs[x].status == UnitStatus::unit) == (x == fm.unit));
}

TEST_CASE("boxtimes with the unit monoid changes nothing objectwise") {
  auto w = jwin(2, 3);
  for (const auto& a : {free_monoid({1, 1}, w).monoid, terminal_monoid(w)}) {
    const auto box = boxtimes(a, unit_monoid(w));
    for (ObjId k = 0; k < w->object_count(); ++k) CHECK(box.monoid.size(k) == a.size(k));
    CHECK(box.monoid.check().ok());
  }
}

TEST_CASE("boxtimes of free monoids: pi0 is the product within the window") {
  auto w = jwin(2, 4);
  const auto a = free_monoid({1, 2}, w);
  const auto b = free_monoid({1, 1}, w);
  const auto box = boxtimes(a.monoid, b.monoid);
  CHECK(box.monoid.check().ok());
  const auto pa = pi0_hocolim(a.monoid), pb = pi0_hocolim(b.monoid), pab = pi0_hocolim(box.monoid);
  const auto la = classes_by_length(a, pa), lb = classes_by_length(b, pb);
  // class of (k, x) in A ⊠ B -> (class of (k1, a), class of (k2, b))
  std::map<std::uint32_t, std::pair<unsigned, unsigned>> image;
  std::uint64_t e = 0;
  for (ObjId k = 0; k < w->object_count(); ++k)
    for (std::uint32_t x = 0; x < box.monoid.size(k); ++x, ++e) {
      const auto& r = box.representative[k][x];
      const std::pair<unsigned, unsigned> pq{a.length[r.k1][r.a], b.length[r.k2][r.b]};
      auto [it, fresh] = image.emplace(pab.component[e], pq);
      CHECK(it->second == pq);
    }
  std::set<std::pair<unsigned, unsigned>> values;
  for (const auto& [c, pq] : image) values.insert(pq);
  CHECK(values.size() == pab.size);  // injective
  // (1,2)^p ⊞ (1,1)^q = (p+q, 2p+q) must fit into (2,4)
  std::set<std::pair<unsigned, unsigned>> expect;
  for (unsigned p = 0; p <= 2; ++p)
    for (unsigned q = 0; q <= 2; ++q)
      if (p + q <= 2 && 2 * p + q <= 4) expect.insert({p, q});
  CHECK(values == expect);
  (void)la;
  (void)lb;
}

TEST_CASE("free(g) ⊠ free(g) maps onto the length-2 part of free(g)") {
  auto w = jwin(2, 4);
  const auto f = free_monoid({1, 2}, w);
  const auto box = boxtimes(f.monoid, f.monoid);
  const auto& c = w->category();
  for (ObjId k = 0; k < w->object_count(); ++k) {
    std::set<std::uint32_t> hit;
    for (const auto& r : box.representative[k])
      if (f.length[r.k1][r.a] == 1 && f.length[r.k2][r.b] == 1)
        hit.insert(f.monoid.act(r.f, f.monoid.mult(r.k1, r.a, r.k2, r.b)));
    std::set<std::uint32_t> expect;
    for (std::uint32_t x = 0; x < f.monoid.size(k); ++x)
      if (f.length[k][x] == 2) expect.insert(x);
    CHECK(hit == expect);
  }
  (void)c;
}

TEST_CASE("restriction along the diagonal") {
  auto w = jwin(3, 3);
  const auto t = restrict_along_delta(terminal_monoid(w));
  for (ObjId m = 0; m < t.window().object_count(); ++m) CHECK(t.size(m) == 1);
  CHECK(t.check().ok());

  const auto f = free_monoid({1, 1}, w);
  const auto r = restrict_along_delta(f.monoid);
  CHECK(r.check().ok());
  for (unsigned m = 0; m <= 3; ++m) {
    std::size_t expect = 0;
    for (unsigned p = 0; p <= m; ++p) expect += brute_orbits({1, 1}, p, {m, m});
    CHECK(r.size(m) == expect);
  }
  // π₀ of the restriction maps onto the degree-0 classes over J
  const auto pj = pi0_hocolim(f.monoid), pi = pi0_hocolim(r);
  std::set<std::uint32_t> hit;
  std::map<std::uint32_t, std::uint32_t> induced;
  std::uint64_t e = 0;
  std::vector<std::uint64_t> offset{0};
  for (ObjId k = 0; k < w->object_count(); ++k) offset.push_back(offset.back() + f.monoid.size(k));
  for (ObjId m = 0; m < r.window().object_count(); ++m)
    for (std::uint32_t a = 0; a < r.size(m); ++a, ++e) {
      const auto c = pj.component[offset[w->object_id({m, m})] + a];
      hit.insert(c);
      CHECK(induced.emplace(pi.component[e], c).first->second == c);
    }
  CHECK(hit.size() == pj.size);
  CHECK(pi.size >= pj.size);
}

TEST_CASE("monoid JSON round trip") {
  const auto f = free_monoid({1, 2}, jwin(2, 4)).monoid;
  const auto j = to_json(f);
  const auto g = monoid_from_json(j);
  CHECK(to_json(g) == j);
  for (ObjId k = 0; k < f.window().object_count(); ++k) CHECK(g.size(k) == f.size(k));
  auto bad = j;
  bad["unit"] = 7;
  CHECK_THROWS_AS(monoid_from_json(bad), InputError);
  bad = j;
  bad["schema"] = "other";
  CHECK_THROWS_AS(monoid_from_json(bad), InputError);
  // terminal monoid from a minimal document
  nlohmann::json t = {{"schema", "glj.monoid/1"}, {"category", "j"}, {"bound", {1, 1}}, {"unit", 0}};
  t["values"] = nlohmann::json::array();
  for (unsigned a = 0; a <= 1; ++a)
    for (unsigned b = 0; b <= 1; ++b) t["values"].push_back({{"object", {a, b}}, {"size", 1}});
  const auto tm = monoid_from_json(t);
  CHECK(tm.check().ok());
  CHECK(pi0_hocolim(tm).size == 3);
}

TEST_CASE("El of free((1,2)) on J<=(3,5): H1 per word length") {
  const auto f = free_monoid({1, 2}, jwin(3, 5));
  const auto el = f.monoid.elements();
  const auto& base = f.monoid.window();
  std::vector<bool> isos(el.category.morphism_count());
  for (MorId e = 0; e < isos.size(); ++e) {
    const MorId g = (*el.base_morphism)[e];
    isos[e] = base.category().dom(g) == base.category().cod(g);
  }
  std::vector<ObjId> basepoint(f.max_length + 1, UINT32_MAX);
  for (ObjId x = 0; x < el.category.object_count(); ++x) {
    auto& b = basepoint[f.length[el.base_object[x]][el.point[x]]];
    if (b == UINT32_MAX) b = x;
  }
  CHECK(f.max_length == 2);
  CHECK(category_h1(el.category, basepoint[0], isos).to_string() == "0");
  CHECK(category_h1(el.category, basepoint[1], isos).to_string() == "0");
  CHECK(category_h1(el.category, basepoint[2], isos).to_string() == "Z/2");
  // the library helper agrees, class by class
  const auto m = pi0_hocolim(f.monoid);
  const auto h = hocolim_h1(f.monoid, m);
  REQUIRE(h.size() == 3);
  for (std::uint32_t c = 0; c < 3; ++c) {
    const auto [k, p] = m.representative[c];
    CHECK(h[c] == category_h1(el.category, basepoint[f.length[k][p]], isos));
  }
}
