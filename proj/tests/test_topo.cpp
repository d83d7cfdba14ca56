#include "glj/errors.hpp"
#include "glj/simplicial.hpp"
#include "glj/topo.hpp"
#include "corpus.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace glj;

namespace {

AbelianGroup pi1_ab(const TruncatedSimplicialSet& x, std::uint32_t v = 0) {
  return abelianize(pi1_presentation(x, v).presentation);
}

void check_boundary_squares_to_zero(const TruncatedSimplicialSet& x) {
  for (int n = 2; n <= x.dim(); ++n) {
    const auto a = boundary_matrix(x, n - 1).to_dense();
    const auto b = boundary_matrix(x, n).to_dense();
    const auto ab = a * b;
    REQUIRE(ab == DenseMatrix(ab.rows(), ab.cols()));
  }
}

}  // namespace

TEST_CASE("bounded integer nerve is a simplicial set") {
  for (int bound = 1; bound <= 4; ++bound) CHECK(test::bounded_integer_nerve(bound, 3).check().empty());
}

TEST_CASE("components examples") {
  PresentedCategory::Builder b;
  b.add_object();
  b.add_object();
  b.set_identity(0, b.add_morphism(0, 0));
  b.set_identity(1, b.add_morphism(1, 1));
  const MorId f = b.add_morphism(0, 1);
  b.add_composite(0, 0, 0);
  b.add_composite(1, 1, 1);
  b.add_composite(f, 0, f);
  b.add_composite(1, f, f);
  const auto arrow = std::move(b).build();
  std::size_t n = 0;
  components(nerve(arrow, 1).sset, &n);
  CHECK(n == 1);
  const auto u = disjoint_union(nerve(arrow, 2).sset, nerve(test::cyclic_group(3), 2).sset);
  components(u, &n);
  CHECK(n == 2);
  CHECK(u.check().empty());
}

TEST_CASE("homology examples") {
  const auto z2 = nerve(test::cyclic_group(2), 3).sset;
  CHECK(homology(z2, 1).to_string() == "Z/2");
  CHECK(homology(simplicial_circle(2), 1).to_string() == "Z");
  CHECK(homology(simplicial_circle(2), 0).to_string() == "Z");
  CHECK_THROWS_AS(homology(z2, 3), InputError);
}

TEST_CASE("group homology oracle: H1(BG) = G^ab, H2 for small groups") {
  struct Case {
    PresentedCategory g;
    std::string h1, h2;
  };
  std::vector<Case> cases;
  cases.push_back({test::cyclic_group(1), "0", "0"});
  cases.push_back({test::cyclic_group(3), "Z/3", "0"});
  cases.push_back({test::cyclic_group(4), "Z/4", "0"});
  cases.push_back({test::group_category({{1, 0, 2, 3}, {0, 1, 3, 2}}), "Z/2 + Z/2", "Z/2"});
  cases.push_back({test::group_category({{1, 0, 2}, {1, 2, 0}}), "Z/2", "0"});
  for (const auto& c : cases) {
    const auto nv = nerve(c.g, 3);
    CHECK(homology(nv.sset, 1).to_string() == c.h1);
    CHECK(homology(nv.sset, 2).to_string() == c.h2);
    CHECK(homology(nv.sset, 0).to_string() == "Z");
  }
}

TEST_CASE("spheres") {
  for (int k = 2; k <= 4; ++k) {
    const auto s = simplex_boundary(k, k);
    CHECK(s.check().empty());
    for (int n = 0; n < k; ++n) {
      const auto h = homology(s, n);
      if (n == 0 || n == k - 1)
        CHECK(h.to_string() == "Z");
      else
        CHECK(h.trivial());
    }
  }
}

TEST_CASE("pi1 presentations") {
  const auto circle = pi1_presentation(simplicial_circle(2), 0);
  CHECK(circle.presentation.generators == 1);
  CHECK(circle.presentation.relators.empty());

  const auto z2 = pi1_presentation(nerve(test::cyclic_group(2), 2).sset, 0);
  CHECK(z2.presentation.generators == 1);
  REQUIRE(z2.presentation.relators.size() == 1);
  CHECK(z2.presentation.relators[0] == std::vector<int>{1, 1});
  CHECK(abelianize(z2.presentation).to_string() == "Z/2");

  CHECK(pi1_ab(test::bounded_integer_nerve(3, 2)).to_string() == "Z");
  CHECK(homology(test::bounded_integer_nerve(3, 2), 1).to_string() == "Z");
}

TEST_CASE("abelianize examples") {
  CHECK(abelianize({1, {{1, 1}}}).to_string() == "Z/2");
  CHECK(abelianize({2, {{1, 2, -1, -2}}}).to_string() == "Z^2");
  CHECK(abelianize({3, {}}).to_string() == "Z^3");
  CHECK_THROWS_AS(abelianize({1, {{2}}}), InputError);
}

TEST_CASE("property: boundary squares to zero and H1 agrees with abelianized pi1") {
  const auto corpus = test::regression_corpus();
  CHECK(corpus.size() >= 10);
  for (const auto& [name, x] : corpus) {
    CAPTURE(name);
    std::size_t comps = 0;
    components(x, &comps);
    CHECK(comps == 1);
    CHECK(x.check().empty());
    check_boundary_squares_to_zero(x);
    CHECK(homology(x, 1) == pi1_ab(x));
  }
}

TEST_CASE("property: homology is invariant under relabeling simplices") {
  const auto x = nerve(product(test::cyclic_group(2), test::cyclic_group(3)), 3).sset;
  const auto h1 = homology(x, 1), h2 = homology(x, 2);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::vector<std::uint32_t>> perm(x.dim() + 1);
    for (int n = 0; n <= x.dim(); ++n) {
      perm[n].resize(x.count(n));
      std::iota(perm[n].begin(), perm[n].end(), 0u);
      std::shuffle(perm[n].begin(), perm[n].end(), test::rng());
    }
    const auto y = relabel(x, perm);
    REQUIRE(y.check().empty());
    CHECK(homology(y, 1) == h1);
    CHECK(homology(y, 2) == h2);
  }
}

TEST_CASE("skeleton preserves H1") {
  auto z3 = std::make_shared<const PresentedCategory>(test::cyclic_group(6));
  // Z/6 acting on Z/6 / <3>: El is a groupoid equivalent to B(Z/2).
  std::vector<std::vector<std::uint32_t>> action(6);
  for (MorId g = 0; g < 6; ++g)
    for (std::uint32_t p = 0; p < 3; ++p) action[g].push_back((p + g) % 3);
  // cyclic_group(6) numbers elements by powers of the generator.
  const auto el = category_of_elements(SetValuedDiagram(z3, {3}, action));
  const auto isos = isomorphisms(el.category);
  CHECK(std::all_of(isos.begin(), isos.end(), [](bool b) { return b; }));
  const auto direct = homology(nerve(el.category, 2).sset, 1);
  CHECK(direct.to_string() == "Z/2");
  CHECK(category_h1(el.category, 0, isos) == direct);
  CHECK(skeleton(el.category, isos).category.object_count() == 1);
}

TEST_CASE("JSON round trip of a simplicial set") {
  const auto x = nerve(test::cyclic_group(3), 3).sset;
  const auto j = to_json(x);
  const auto y = sset_from_json(j);
  CHECK(y == x);
  CHECK(to_json(y).dump() == j.dump());
}
