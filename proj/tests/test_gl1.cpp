#include "glj/errors.hpp"
#include "glj/gl1.hpp"
#include "support.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace glj;

namespace {

GradedUnitGroup ku() {
  return GradedUnitGroup::from_json(nlohmann::json::parse(R"({
    "generators": [{"name": "u", "degree": 2, "order": 0}, {"name": "t", "degree": 0, "order": 2}],
    "relations": [], "sign": [0, 1]})"));
}
GradedUnitGroup sphere_like() {
  return GradedUnitGroup::from_json(nlohmann::json::parse(R"({
    "generators": [{"name": "t", "degree": 0, "order": 2}], "sign": [1]})"));
}
GradedUnitGroup f2_laurent() {
  return GradedUnitGroup::from_json(nlohmann::json::parse(R"({
    "generators": [{"name": "x", "degree": 1, "order": 0}], "sign": [0]})"));
}

AbelianGroup z(std::size_t rank, std::vector<int> torsion = {}) {
  AbelianGroup a;
  a.rank = rank;
  for (int t : torsion) a.torsion.push_back(t);
  return a;
}

// Order of a finite group Z/o_1 x ... x Z/o_k modulo relations, by closing
// the relation subgroup inside the finite product.
std::size_t brute_order(const std::vector<std::uint64_t>& orders, const std::vector<std::vector<std::int64_t>>& rels,
                        std::set<std::vector<std::int64_t>>* subgroup = nullptr) {
  std::size_t total = 1;
  for (auto o : orders) total *= o;
  auto reduce = [&](std::vector<std::int64_t> v) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = ((v[i] % std::int64_t(orders[i])) + orders[i]) % orders[i];
    return v;
  };
  std::set<std::vector<std::int64_t>> h{std::vector<std::int64_t>(orders.size(), 0)};
  std::vector<std::vector<std::int64_t>> frontier(h.begin(), h.end());
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (const auto& r : rels) {
      auto y = x;
      for (std::size_t i = 0; i < y.size(); ++i) y[i] += r[i];
      y = reduce(y);
      if (h.insert(y).second) frontier.push_back(y);
    }
  }
  if (subgroup) *subgroup = h;
  return total / h.size();
}

std::size_t order_of(const AbelianGroup& a) {
  REQUIRE(a.rank == 0);
  std::size_t n = 1;
  for (const auto& t : a.torsion) n *= static_cast<std::size_t>(t.small());
  return n;
}

// Random presentation: degree-0 torsion generators, a few graded free
// ones, relations inside ker(deg), sign an element of order <= 2.
GradedUnitGroup random_units() {
  GradedUnitGroup g;
  const std::size_t nt = test::uniform(0, 3), nf = test::uniform(0, 3);
  for (std::size_t i = 0; i < nt; ++i)
    g.generators.push_back({"t" + std::to_string(i), 0, test::uniform(1, 6)});
  for (std::size_t i = 0; i < nf; ++i)
    g.generators.push_back({"u" + std::to_string(i), std::int64_t(test::uniform(0, 8)) - 4, 0});
  if (g.generators.empty()) g.generators.push_back({"e", 0, 1});
  const std::size_t k = g.generators.size();
  for (std::size_t r = test::uniform(0, 2); r > 0; --r) {
    std::vector<std::int64_t> row(k, 0);
    const std::size_t i = test::uniform(0, k - 1), j = test::uniform(0, k - 1);
    const std::int64_t di = g.generators[i].degree, dj = g.generators[j].degree;
    if (i == j) {
      if (di == 0) row[i] = std::int64_t(test::uniform(1, 4));
    } else {
      const std::int64_t c = std::gcd(di, dj);
      row[i] = c ? dj / c : std::int64_t(test::uniform(0, 3));
      row[j] = c ? -di / c : std::int64_t(test::uniform(0, 3));
    }
    g.relations.push_back(row);
  }
  g.sign.assign(k, 0);
  // an order-2 torsion generator, if any, plays -1 half the time
  for (std::size_t i = 0; i < nt; ++i)
    if (g.generators[i].order % 2 == 0 && test::uniform(0, 1)) {
      g.sign[i] = std::int64_t(g.generators[i].order / 2);
      break;
    }
  return g;
}

}  // namespace

TEST_CASE("KU") {
  const auto g = ku();
  CHECK(periodicity(g) == 2);
  const auto s = five_term(g);
  CHECK(s.ok());
  CHECK(s.pi0 == z(0, {2}));
  CHECK(s.pi1 == z(0, {2}));
  CHECK(s.groups[2].structure() == z(1));
  CHECK(k_invariant_nonzero(g));
  const auto k = k_invariant(g, s);
  REQUIRE(k.named_class);
  CHECK(*k.named_class == "Sq^2");
  CHECK(g.word(hopf_image(g)) == "t");
  const auto r = gl1_report(g).to_json();
  CHECK(r["schema"] == "glj.gl1/1");
  CHECK(r["pi0"] == "Z/2");
  CHECK(r["k_invariant"]["class"] == "Sq^2");
}

TEST_CASE("sphere-like units") {
  const auto g = sphere_like();
  CHECK(periodicity(g) == 0);
  const auto s = five_term(g);
  CHECK(s.pi0 == z(1));
  CHECK(s.pi1 == z(0, {2}));
  CHECK(g.word(hopf_image(g)) == "t");
  const auto k = k_invariant(g, s);
  CHECK(k.nonzero);
  CHECK(!k.named_class);
  CHECK(k.notes.size() == 1);
}

TEST_CASE("F2 Laurent units") {
  const auto g = f2_laurent();
  CHECK(periodicity(g) == 1);
  const auto s = five_term(g);
  CHECK(s.pi0.trivial());
  CHECK(s.pi1.trivial());
  CHECK(!k_invariant_nonzero(g));
  CHECK(g.word(hopf_image(g)) == "1");
  CHECK(gl1_report(g).to_table().find("does not apply") != std::string::npos);
}

TEST_CASE("periodicity accounts for relations and several generators") {
  GradedUnitGroup g;
  g.generators = {{"a", 4, 0}, {"b", 6, 0}, {"c", 0, 0}};
  g.relations = {{3, -2, 0}};
  g.sign = {0, 0, 0};
  CHECK(periodicity(g) == 2);
  const auto s = five_term(g);
  CHECK(s.pi0 == z(0, {2}));
  // ker(deg) = <a^3 b^-2, c> / <a^3 b^-2> = Z
  CHECK(s.pi1 == z(1));
}

TEST_CASE("invalid units are rejected") {
  auto bad = [](const char* text) { return GradedUnitGroup::from_json(nlohmann::json::parse(text)); };
  CHECK_THROWS_AS(bad(R"({"generators": [{"name": "u", "degree": 2, "order": 3}], "sign": [0]})"), InputError);
  CHECK_THROWS_AS(bad(R"({"generators": [{"name": "u", "degree": 2}], "sign": [1]})"), InputError);
  CHECK_THROWS_AS(bad(R"({"generators": [{"name": "t", "order": 3}], "sign": [1]})"), InputError);
  CHECK_THROWS_AS(bad(R"({"generators": [{"name": "u", "degree": 1}, {"name": "v", "degree": 1}],
                          "relations": [[1, 1]], "sign": [0, 0]})"),
                  InputError);
  CHECK_THROWS_AS(bad(R"({"generators": [], "sign": []})"), InputError);
  CHECK_THROWS_AS(bad(R"({"generators": [{"name": "t", "order": 2}], "sign": "s"})"), InputError);
  CHECK_THROWS_AS(bad(R"({"generators": 3})"), InputError);
  CHECK(bad(R"({"generators": [{"name": "t", "order": 2}], "sign": "t"})").sign == std::vector<std::int64_t>{1});
}

TEST_CASE("JSON round trip") {
  for (const auto& g : {ku(), sphere_like(), f2_laurent()}) {
    const auto back = GradedUnitGroup::from_json(g.to_json());
    CHECK(back.to_json() == g.to_json());
  }
}

TEST_CASE("exact_at detects a non-exact sequence") {
  // Z --2--> Z --1--> Z/4 : the kernel of the second map is 4Z, not 2Z
  const PresentedGroup b{"Z", 1, DenseMatrix(1, 0)}, c{"Z/4", 1, DenseMatrix::from_rows({{4}})};
  CHECK(!exact_at(DenseMatrix::from_rows({{2}}), b, DenseMatrix::from_rows({{1}}), c));
  CHECK(exact_at(DenseMatrix::from_rows({{4}}), b, DenseMatrix::from_rows({{1}}), c));
  const PresentedGroup c2{"Z/2", 1, DenseMatrix::from_rows({{2}})};
  CHECK(exact_at(DenseMatrix::from_rows({{2}}), b, DenseMatrix::from_rows({{1}}), c2));
  // composite not zero
  CHECK(!exact_at(DenseMatrix::from_rows({{1}}), b, DenseMatrix::from_rows({{1}}), c2));
}

TEST_CASE("random presentations: invariants") {
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_units();
    g.check();
    const auto s = five_term(g);
    CHECK(s.ok());
    const auto n = s.periodicity;
    CHECK(n >= 0);
    for (const auto& x : g.generators)
      if (n) CHECK(x.degree % n == 0);
      else CHECK(x.degree == 0);
    // G ≅ ker(deg) ⊕ nZ, and G/ker(deg) ≅ Z or 0
    const PresentedGroup all{"G", g.rank(), g.relation_lattice()};
    auto expect = s.pi1;
    if (n) ++expect.rank;
    CHECK(all.structure() == expect);
    CHECK((n ? s.pi0 == z(0, n == 1 ? std::vector<int>{} : std::vector<int>{int(n)}) : s.pi0 == z(1)));
    // hopf image squares to 1
    auto h2 = hopf_image(g);
    for (auto& x : h2) x *= Integer(2);
    CHECK(g.is_identity(h2));
  }
}

TEST_CASE("random finite presentations against enumeration") {
  for (int trial = 0; trial < 200; ++trial) {
    GradedUnitGroup g;
    std::vector<std::uint64_t> orders;
    for (std::size_t i = test::uniform(1, 3); i > 0; --i) {
      orders.push_back(test::uniform(1, 6));
      g.generators.push_back({"t" + std::to_string(orders.size()), 0, orders.back()});
    }
    for (std::size_t r = test::uniform(0, 2); r > 0; --r) {
      std::vector<std::int64_t> row;
      for (std::size_t i = 0; i < orders.size(); ++i) row.push_back(std::int64_t(test::uniform(0, 5)) - 2);
      g.relations.push_back(row);
    }
    // with an extra graded generator of random degree
    const std::int64_t d = std::int64_t(test::uniform(1, 5));
    g.generators.push_back({"u", d, 0});
    for (auto& row : g.relations) row.push_back(0);
    g.sign.assign(g.rank(), 0);
    std::set<std::vector<std::int64_t>> h;
    const auto order = brute_order(orders, g.relations, &h);
    const auto s = five_term(g);
    CHECK(s.periodicity == d);
    CHECK(order_of(s.pi1) == order);
    // an element is trivial iff it lies in the closed relation subgroup
    for (std::size_t i = 0; i < orders.size(); ++i) {
      std::vector<Integer> x(g.rank());
      x[i] = 1;
      std::vector<std::int64_t> e(orders.size(), 0);
      e[i] = orders[i] == 1 ? 0 : 1;
      CHECK(g.is_identity(x) == (h.count(e) > 0));
    }
  }
}

TEST_CASE("connective cover") {
  for (const auto& g : {ku(), sphere_like(), f2_laurent()}) {
    const auto c = connective_cover(g);
    const auto sc = five_term(c.group), s = five_term(g);
    CHECK(sc.periodicity == 0);
    CHECK(sc.pi0 == z(1));
    // π₁ agrees, the sign maps to the sign
    CHECK(sc.pi1 == s.pi1);
    CHECK(k_invariant_nonzero(c.group) == k_invariant_nonzero(g));
    // Z -> Z/n is onto and the inclusion lands in degree 0
    CHECK(s.onto_last);
    for (std::size_t j = 0; j < c.inclusion.cols(); ++j) {
      std::vector<Integer> x(g.rank());
      for (std::size_t r = 0; r < g.rank(); ++r) x[r] = c.inclusion.at(r, j);
      CHECK(g.degree(x) == 0);
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_units();
    const auto c = connective_cover(g);
    CHECK(five_term(c.group).pi1 == five_term(g).pi1);
  }
}
