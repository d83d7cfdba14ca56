#include "glj/errors.hpp"
#include "glj/permcat.hpp"
#include "glj/topo.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace glj;

namespace {

// All triples (beta1, beta2, sigma) by brute force: every pair of injections
// and every injection of the complement of beta1 into n2 whose image is the
// complement of beta2.
std::vector<KMorphism> brute_homset(KObject a, KObject b) {
  std::vector<KMorphism> out;
  for (const auto& b1 : enumerate_injections(a.m1, b.m1))
    for (const auto& b2 : enumerate_injections(a.m2, b.m2)) {
      const auto c1 = complement(b1), c2 = complement(b2);
      for (const auto& s : enumerate_injections(c1.size(), b.m2)) {
        std::set<unsigned> image(s.table().begin(), s.table().end());
        if (!std::equal(image.begin(), image.end(), c2.begin(), c2.end())) continue;
        KMorphism f{b1, b2, {}};
        for (auto v : s.table()) f.sigma.push_back(v);
        out.push_back(f);
      }
    }
  return out;
}

// Composite via an explicit matching: every x in l1 is sent either to a
// point of m1 (tag 0) or to a point of l2 (tag 1).
KMorphism matching_compose(const KMorphism& g, const KMorphism& f) {
  auto route = [](const KMorphism& h) {
    std::map<unsigned, std::pair<int, unsigned>> r;
    for (std::size_t y = 1; y <= h.beta1.domain_size(); ++y) r[h.beta1(y)] = {0, unsigned(y)};
    std::size_t i = 0;
    for (unsigned x : complement(h.beta1)) r[x] = {1, h.sigma[i++]};
    return r;
  };
  const auto rf = route(f), rg = route(g);
  std::map<unsigned, unsigned> beta1;
  std::map<unsigned, unsigned> sigma;
  for (const auto& [x, t] : rg) {
    if (t.first == 1) {
      sigma[x] = t.second;
      continue;
    }
    const auto [tag, z] = rf.at(t.second);
    if (tag == 0)
      beta1[z] = x;
    else
      sigma[x] = g.beta2(z);
  }
  std::vector<unsigned> b1;
  for (const auto& [z, x] : beta1) b1.push_back(x);
  KMorphism r{Injection(g.beta1.codomain_size(), b1), compose(g.beta2, f.beta2), {}};
  for (const auto& [x, v] : sigma) r.sigma.push_back(static_cast<std::uint8_t>(v));
  return r;
}

KObject random_object(unsigned bound) {
  return {unsigned(test::uniform(0, bound)), unsigned(test::uniform(0, bound))};
}

}  // namespace

TEST_CASE("J hom-set examples") {
  CHECK(j_homset({1, 2}, {2, 2}).empty());
  const auto e = j_homset({0, 0}, {0, 0});
  REQUIRE(e.size() == 1);
  CHECK(e[0] == k_identity(IndexKind::J, {0, 0}));
  CHECK(j_homset({1, 1}, {2, 2}).size() == 4);
  CHECK(j_homset({2, 2}, {2, 2}).size() == 4);
  CHECK(degree(KObject{1, 2}) == 1);
  CHECK(degree(KObject{3, 3}) == 0);
  for (const auto& f : j_homset({1, 2}, {2, 3})) CHECK(degree(f.dom()) == degree(f.cod()));
}

TEST_CASE("property: J hom-sets match brute force for coordinates up to 3") {
  for (unsigned a1 = 0; a1 <= 3; ++a1)
    for (unsigned a2 = 0; a2 <= 3; ++a2)
      for (unsigned b1 = 0; b1 <= 3; ++b1)
        for (unsigned b2 = 0; b2 <= 3; ++b2) {
          const KObject a{a1, a2}, b{b1, b2};
          const auto hs = j_homset(a, b);
          const auto brute = brute_homset(a, b);
          REQUIRE(hs.size() == brute.size());
          CHECK(hs.size() == k_hom_count(IndexKind::J, a, b));
          if (degree(a) != degree(b)) CHECK(hs.empty());
          std::set<std::string> seen;
          for (std::size_t r = 0; r < hs.size(); ++r) {
            CHECK(hs[r] == brute[r]);  // brute force runs in lexicographic order too
            CHECK(k_hom_rank(IndexKind::J, hs[r]) == r);
            check_morphism(IndexKind::J, hs[r]);
            seen.insert(hs[r].to_string(IndexKind::J));
          }
          CHECK(seen.size() == hs.size());
        }
}

TEST_CASE("I and Sigma hom-sets") {
  CHECK(k_hom_count(IndexKind::I, {2, 0}, {3, 0}) == 6);
  CHECK(k_hom_count(IndexKind::I, {3, 0}, {2, 0}) == 0);
  CHECK(k_hom_count(IndexKind::Sigma, {3, 0}, {3, 0}) == 6);
  CHECK(k_hom_count(IndexKind::Sigma, {2, 0}, {3, 0}) == 0);
  for (const auto& f : k_homset(IndexKind::Sigma, {3, 0}, {3, 0})) check_morphism(IndexKind::Sigma, f);
  CHECK_THROWS_AS(check_morphism(IndexKind::Sigma, k_homset(IndexKind::I, {1, 0}, {2, 0})[0]), InputError);
}

TEST_CASE("J composition examples") {
  // (0,0) -> (1,1) -> (2,2): all 1 * 4 composable pairs against the matching oracle.
  for (const auto& f : j_homset({0, 0}, {1, 1}))
    for (const auto& g : j_homset({1, 1}, {2, 2})) CHECK(j_compose(g, f) == matching_compose(g, f));
  const auto f = j_homset({1, 2}, {2, 3})[1];
  CHECK(j_compose(k_identity(IndexKind::J, f.cod()), f) == f);
  CHECK(j_compose(f, k_identity(IndexKind::J, f.dom())) == f);
  CHECK_THROWS_AS(j_compose(f, f), InputError);
}

TEST_CASE("property: J composition agrees with the matching oracle and is associative") {
  for (int trial = 0; trial < 2000; ++trial) {
    const KObject a = random_object(2);
    const int d = degree(a);
    auto lift = [&](KObject x) {
      KObject y{x.m1 + unsigned(test::uniform(0, 2)), 0};
      y.m2 = unsigned(int(y.m1) + d);
      return y;
    };
    const KObject b = lift(a), c = lift(b), e = lift(c);
    auto pick = [](KObject x, KObject y) {
      return k_hom_unrank(IndexKind::J, x, y, test::uniform(0, k_hom_count(IndexKind::J, x, y) - 1));
    };
    const auto f = pick(a, b), g = pick(b, c), h = pick(c, e);
    const auto gf = j_compose(g, f);
    REQUIRE(gf == matching_compose(g, f));
    check_morphism(IndexKind::J, gf);
    CHECK(j_compose(h, gf) == j_compose(j_compose(h, g), f));
  }
}

TEST_CASE("monoidal product") {
  CHECK(k_product(KObject{1, 1}, KObject{0, 0}) == KObject{1, 1});
  for (int trial = 0; trial < 50; ++trial) {
    const KObject x = random_object(3), y = random_object(3);
    CHECK(degree(k_product(x, y)) == degree(x) + degree(y));
  }
  // id_(1,1) ⊞ f tabulated by hand: beta_i shift by one, sigma shifts by one.
  for (const auto& f : j_homset({0, 1}, {1, 2})) {
    const auto p = k_product(IndexKind::J, k_identity(IndexKind::J, {1, 1}), f);
    std::vector<unsigned> b1{1}, b2{1};
    for (auto v : f.beta1.table()) b1.push_back(v + 1u);
    for (auto v : f.beta2.table()) b2.push_back(v + 1u);
    KMorphism expect{Injection(2, b1), Injection(3, b2), {}};
    for (auto v : f.sigma) expect.sigma.push_back(static_cast<std::uint8_t>(v + 1));
    CHECK(p == expect);
    check_morphism(IndexKind::J, p);
  }
}

TEST_CASE("property: symmetry is natural and self-inverse") {
  for (unsigned a1 = 0; a1 <= 2; ++a1)
    for (unsigned a2 = 0; a2 <= 2; ++a2)
      for (unsigned b1 = 0; b1 <= 2; ++b1)
        for (unsigned b2 = 0; b2 <= 2; ++b2) {
          const KObject a{a1, a2}, b{b1, b2};
          const auto there = k_symmetry(IndexKind::J, a, b), back = k_symmetry(IndexKind::J, b, a);
          CHECK(j_compose(back, there) == k_identity(IndexKind::J, k_product(a, b)));
        }
  for (int trial = 0; trial < 500; ++trial) {
    const KObject a = random_object(2), b = random_object(2);
    const KObject a2{a.m1 + 1, a.m2 + 1}, b2{b.m1, b.m2 + 0};
    const auto hf = j_homset(a, a2), hg = j_homset(b, b2);
    const auto& f = hf[test::uniform(0, hf.size() - 1)];
    const auto& g = hg[test::uniform(0, hg.size() - 1)];
    CHECK(j_compose(k_symmetry(IndexKind::J, a2, b2), k_product(IndexKind::J, f, g)) ==
          j_compose(k_product(IndexKind::J, g, f), k_symmetry(IndexKind::J, a, b)));
    // interchange law
    const auto ff = j_homset(a2, {a2.m1 + 1, a2.m2 + 1})[0];
    const auto gg = k_identity(IndexKind::J, b2);
    CHECK(k_product(IndexKind::J, j_compose(ff, f), j_compose(gg, g)) ==
          j_compose(k_product(IndexKind::J, ff, gg), k_product(IndexKind::J, f, g)));
  }
}

TEST_CASE("windows") {
  const auto j0 = PermutativeWindow::make(IndexKind::J, 0);
  CHECK(j0->category().object_count() == 1);
  CHECK(j0->category().morphism_count() == 1);

  const std::vector<std::size_t> morphisms{1, 0, 27, 219, 2931};
  for (unsigned n : {2u, 3u, 4u}) {
    const auto w = PermutativeWindow::make(IndexKind::J, n);
    std::uint64_t brute = 0;
    for (ObjId a = 0; a < w->object_count(); ++a)
      for (ObjId b = 0; b < w->object_count(); ++b) brute += brute_homset(w->object(a), w->object(b)).size();
    CHECK(w->category().morphism_count() == brute);
    CHECK(brute == morphisms[n]);
    CHECK(w->object_count() == (n + 1) * (n + 1));
    std::size_t count = 0;
    const auto comp = object_components(w->category(), &count);
    CHECK(count == 2 * n + 1);
    for (ObjId a = 0; a < w->object_count(); ++a)
      for (ObjId b = 0; b < w->object_count(); ++b)
        CHECK((comp[a] == comp[b]) == (w->degree(a) == w->degree(b)));
  }

  const auto s2 = PermutativeWindow::make(IndexKind::Sigma, 2);
  CHECK(s2->category().object_count() == 3);
  std::size_t count = 0;
  object_components(s2->category(), &count);
  CHECK(count == 3);
  for (ObjId x = 0; x < 3; ++x) CHECK(s2->category().out(x).size() == factorial(x));
}

TEST_CASE("J window: ids, composition and products") {
  const auto w = PermutativeWindow::make(IndexKind::J, 3);
  const auto& c = w->category();
  CHECK(validate(c).ok());
  for (MorId f = 0; f < c.morphism_count(); ++f) {
    const auto m = w->morphism(f);
    REQUIRE(w->morphism_id(m) == f);
    CHECK(w->object_id(m.dom()) == c.dom(f));
    CHECK(w->object_id(m.cod()) == c.cod(f));
  }
  for (ObjId x = 0; x < w->object_count(); ++x) CHECK(w->morphism(c.identity(x)) == k_identity(IndexKind::J, w->object(x)));
  for (int trial = 0; trial < 300; ++trial) {
    const MorId f = MorId(test::uniform(0, c.morphism_count() - 1));
    const auto outs = c.out(c.cod(f));
    const MorId g = outs[test::uniform(0, outs.size() - 1)];
    CHECK(w->morphism(c.compose(g, f)) == j_compose(w->morphism(g), w->morphism(f)));
    const MorId h = MorId(test::uniform(0, c.morphism_count() - 1));
    const auto p = w->product_morphism(f, h);
    const auto po = w->product(c.cod(f), c.cod(h));
    CHECK(p.has_value() == po.has_value());
    if (p) CHECK(w->morphism(*p) == k_product(IndexKind::J, w->morphism(f), w->morphism(h)));
  }
  CHECK_THROWS_AS(w->object_id({4, 0}), WindowError);
  CHECK(w->symmetry(w->object_id({1, 0}), w->object_id({0, 1})) ==
        w->morphism_id(k_symmetry(IndexKind::J, {1, 0}, {0, 1})));
}

TEST_CASE("diagonal functor") {
  const auto d = diagonal_functor(3);
  CHECK(d.functor.check().empty());
  CHECK(d.target->object(d.functor.object_map[d.source->object_id({2, 0})]) == KObject{2, 2});
  for (ObjId x = 0; x < d.source->object_count(); ++x) {
    CHECK(d.target->degree(d.functor.object_map[x]) == 0);
    CHECK(d.functor.morphism_map[d.source->category().identity(x)] ==
          d.target->category().identity(d.functor.object_map[x]));
  }
}

TEST_CASE("J-morphism JSON round trip") {
  for (const auto& f : j_homset({1, 2}, {3, 4})) CHECK(kmorphism_from_json(IndexKind::J, to_json(f)) == f);
  auto bad = to_json(j_homset({0, 1}, {1, 2})[0]);
  bad["sigma"] = {1};
  bad["beta2"] = {1};
  CHECK_THROWS_AS(kmorphism_from_json(IndexKind::J, bad), InputError);
  CHECK(parse_index_kind("j") == IndexKind::J);
  CHECK_THROWS_AS(parse_index_kind("k"), InputError);
}
