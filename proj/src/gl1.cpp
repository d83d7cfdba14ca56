#include "glj/gl1.hpp"

#include "glj/errors.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace glj {

namespace {

using Vec = std::vector<Integer>;

SparseColumn to_column(const Vec& v) {
  std::vector<std::pair<std::uint32_t, Integer>> e;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) e.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return make_column(std::move(e));
}

Vec column(const DenseMatrix& m, std::size_t c) {
  Vec v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m.at(r, c);
  return v;
}

Vec mat_vec(const DenseMatrix& m, const Vec& x) {
  Vec y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!x[c].is_zero()) y[r] += m.at(r, c) * x[c];
  return y;
}

DenseMatrix hcat(const DenseMatrix& a, const DenseMatrix& b) {
  require_internal(a.rows() == b.rows(), "hcat: row mismatch");
  DenseMatrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
  }
  return m;
}

bool in_span(const DenseMatrix& gens, const Vec& v) {
  LatticeBasis lb(gens.rows());
  for (std::size_t c = 0; c < gens.cols(); ++c) lb.insert(to_column(column(gens, c)));
  return lb.contains(to_column(v));
}

// Columns spanning the integer kernel of m.
DenseMatrix kernel_basis(const DenseMatrix& m) {
  if (m.rows() == 0) return DenseMatrix::identity(m.cols());
  if (m.cols() == 0) return DenseMatrix(0, 0);
  const auto s = smith_normal_form(m);
  const auto& v = *s.right;
  DenseMatrix k(m.cols(), m.cols() - s.rank());
  for (std::size_t c = s.rank(); c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.cols(); ++r) k.at(r, c - s.rank()) = v.at(r, c);
  return k;
}

// U V V' = I for unimodular V, so V⁻¹ = V' U.
DenseMatrix unimodular_inverse(const DenseMatrix& v) {
  const auto s = smith_normal_form(v);
  require_internal(s.rank() == v.rows() && v.rows() == v.cols(), "inverse: matrix is not unimodular");
  for (const auto& d : s.invariants) require_internal(d.is_unit(), "inverse: matrix is not unimodular");
  return *s.right * *s.left;
}

DenseMatrix column_matrix(const Vec& v) {
  DenseMatrix m(v.size(), 1);
  for (std::size_t r = 0; r < v.size(); ++r) m.at(r, 0) = v[r];
  return m;
}

Vec to_vec(const std::vector<std::int64_t>& v) { return Vec(v.begin(), v.end()); }

// Basis of ker(deg) ⊂ Z^k, and coordinates in it for vectors of ker(deg).
struct DegreeKernel {
  DenseMatrix basis;        // k x m
  DenseMatrix coordinates;  // m x k
};

DegreeKernel degree_kernel(const GradedUnitGroup& g) {
  const std::size_t k = g.rank();
  DenseMatrix d(1, k);
  bool zero = true;
  for (std::size_t i = 0; i < k; ++i) {
    d.at(0, i) = g.generators[i].degree;
    zero = zero && g.generators[i].degree == 0;
  }
  DegreeKernel out;
  if (zero) {
    out.basis = out.coordinates = DenseMatrix::identity(k);
    return out;
  }
  // d V = [n 0 ... 0] (up to the left unit); columns 1.. of V span the kernel
  const auto s = smith_normal_form(d);
  const auto& v = *s.right;
  const auto w = unimodular_inverse(v);
  out.basis = DenseMatrix(k, k - 1);
  out.coordinates = DenseMatrix(k - 1, k);
  for (std::size_t c = 1; c < k; ++c)
    for (std::size_t r = 0; r < k; ++r) {
      out.basis.at(r, c - 1) = v.at(r, c);
      out.coordinates.at(c - 1, r) = w.at(c, r);
    }
  return out;
}

}  // namespace

// ------------------------------------------------------------ input

std::int64_t GradedUnitGroup::degree(const Vec& x) const {
  Integer d = 0;
  for (std::size_t i = 0; i < rank(); ++i) d += x[i] * Integer(generators[i].degree);
  require_internal(d.is_small(), "degree overflow");
  return d.small();
}

DenseMatrix GradedUnitGroup::relation_lattice() const {
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < rank(); ++i)
    if (generators[i].order) {
      Vec v(rank());
      v[i] = Integer(static_cast<std::int64_t>(generators[i].order));
      cols.push_back(std::move(v));
    }
  for (const auto& r : relations) cols.push_back(to_vec(r));
  DenseMatrix m(rank(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rank(); ++r) m.at(r, c) = cols[c][r];
  return m;
}

bool GradedUnitGroup::is_identity(const Vec& x) const { return in_span(relation_lattice(), x); }

void GradedUnitGroup::check() const {
  require_input(!generators.empty(), "units: at least one generator is required (use order 1 for a trivial group)");
  std::set<std::string> names;
  for (const auto& g : generators) {
    require_input(!g.name.empty(), "units: generator without a name");
    require_input(names.insert(g.name).second, "units: repeated generator name " + g.name);
    require_input(g.order == 0 || g.degree == 0,
                  "units: generator " + g.name + " has finite order but nonzero degree");
  }
  for (std::size_t i = 0; i < relations.size(); ++i) {
    require_input(relations[i].size() == rank(), "units: relation " + std::to_string(i) + " has the wrong length");
    require_input(degree(to_vec(relations[i])) == 0,
                  "units: relation " + std::to_string(i) + " does not have degree 0");
  }
  require_input(sign.size() == rank(), "units: sign has the wrong length");
  const Vec s = to_vec(sign);
  require_input(degree(s) == 0, "units: sign does not have degree 0");
  Vec s2 = s;
  for (auto& x : s2) x *= Integer(2);
  require_input(is_identity(s2), "units: sign squared is not the identity");
}

std::string GradedUnitGroup::word(const Vec& x) const {
  std::string out;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i].is_zero()) continue;
    if (!out.empty()) out += " ";
    out += generators[i].name;
    if (x[i] != Integer(1)) out += "^" + x[i].to_string();
  }
  return out.empty() ? "1" : out;
}

nlohmann::json GradedUnitGroup::to_json() const {
  nlohmann::json j;
  j["schema"] = "glj.units/1";
  j["generators"] = nlohmann::json::array();
  for (const auto& g : generators) j["generators"].push_back({{"name", g.name}, {"degree", g.degree}, {"order", g.order}});
  j["relations"] = relations;
  j["sign"] = sign;
  return j;
}

GradedUnitGroup GradedUnitGroup::from_json(const nlohmann::json& j) {
  try {
    require_input(!j.contains("schema") || j.at("schema") == "glj.units/1", "units JSON: schema must be glj.units/1");
    GradedUnitGroup g;
    for (const auto& x : j.at("generators"))
      g.generators.push_back(
          {x.at("name").get<std::string>(), x.value("degree", std::int64_t{0}), x.value("order", std::uint64_t{0})});
    g.relations = j.value("relations", std::vector<std::vector<std::int64_t>>{});
    if (j.contains("sign") && j.at("sign").is_string()) {
      // a generator name as shorthand
      const auto name = j.at("sign").get<std::string>();
      g.sign.assign(g.generators.size(), 0);
      bool found = false;
      for (std::size_t i = 0; i < g.generators.size(); ++i)
        if (g.generators[i].name == name) g.sign[i] = 1, found = true;
      require_input(found || name == "1", "units JSON: unknown sign generator " + name);
    } else {
      g.sign = j.value("sign", std::vector<std::int64_t>(g.generators.size(), 0));
    }
    g.check();
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("units JSON: ") + e.what());
  }
}

// ------------------------------------------------------------ groups

AbelianGroup PresentedGroup::structure() const {
  if (relations.cols() == 0 || generators == 0) return AbelianGroup::cokernel(generators, {});
  return AbelianGroup::cokernel(generators, smith_normal_form(relations, false).invariants);
}

bool exact_at(const DenseMatrix& f, const PresentedGroup& b, const DenseMatrix& g, const PresentedGroup& c) {
  require_internal(f.rows() == b.generators && g.cols() == b.generators && g.rows() == c.generators,
                   "exact_at: shape mismatch");
  for (std::size_t j = 0; j < f.cols(); ++j)
    if (!in_span(c.relations, mat_vec(g, column(f, j)))) return false;
  // x with g x ∈ span(R_C): kernel of [g | R_C], first b coordinates
  const auto ker = kernel_basis(hcat(g, c.relations));
  const auto image = hcat(f, b.relations);
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    Vec x(b.generators);
    for (std::size_t r = 0; r < b.generators; ++r) x[r] = ker.at(r, j);
    if (!in_span(image, x)) return false;
  }
  return true;
}

std::int64_t periodicity(const GradedUnitGroup& g) {
  std::int64_t n = 0;
  for (const auto& x : g.generators) n = std::gcd(n, x.degree);
  return n;
}

FiveTermSequence five_term(const GradedUnitGroup& g) {
  g.check();
  const std::size_t k = g.rank();
  const auto lat = g.relation_lattice();
  const auto dk = degree_kernel(g);
  const std::size_t m = dk.basis.cols();
  const Vec sign = to_vec(g.sign);

  FiveTermSequence s;
  s.periodicity = periodicity(g);
  auto& [sgn, u0, uq, z, zn] = s.groups;
  sgn = {"{+-1}", 1, DenseMatrix::from_rows({{2}})};
  u0 = {"(pi_0 E)^x", m, dk.coordinates * lat};
  uq = {"(pi_* E)^x/{+-1}", k, hcat(lat, column_matrix(sign))};
  z = {"Z", 1, DenseMatrix(1, 0)};
  zn = {"Z/n", 1, s.periodicity ? DenseMatrix::from_rows({{s.periodicity}}) : DenseMatrix(1, 0)};

  s.maps[0] = column_matrix(mat_vec(dk.coordinates, sign));
  s.maps[1] = dk.basis;
  s.maps[2] = DenseMatrix(1, k);
  for (std::size_t i = 0; i < k; ++i) s.maps[2].at(0, i) = g.generators[i].degree;
  s.maps[3] = DenseMatrix::from_rows({{1}});

  // the coordinates really are coordinates on ker(deg)
  for (std::size_t j = 0; j < lat.cols(); ++j)
    require_internal(mat_vec(dk.basis, mat_vec(dk.coordinates, column(lat, j))) == column(lat, j),
                     "five_term: relation lattice outside ker(deg)");

  for (int i = 0; i < 3; ++i) s.exact[i] = exact_at(s.maps[i], s.groups[i + 1], s.maps[i + 1], s.groups[i + 2]);
  s.onto_last = in_span(hcat(s.maps[3], zn.relations), Vec{Integer(1)});
  require_internal(s.ok(), "five_term: sequence is not exact");
  s.pi1 = u0.structure();
  s.pi0 = zn.structure();
  return s;
}

nlohmann::json FiveTermSequence::to_json() const {
  nlohmann::json j;
  j["groups"] = nlohmann::json::array();
  for (const auto& g : groups) j["groups"].push_back({{"name", g.name}, {"structure", g.structure().to_string()}});
  j["exact_at"] = {{groups[1].name, exact[0]}, {groups[2].name, exact[1]}, {groups[3].name, exact[2]}};
  j["onto_last"] = onto_last;
  j["periodicity"] = periodicity;
  j["pi0"] = pi0.to_string();
  j["pi1"] = pi1.to_string();
  return j;
}

std::vector<Integer> hopf_image(const GradedUnitGroup& g) { return to_vec(g.sign); }

bool k_invariant_nonzero(const GradedUnitGroup& g) {
  g.check();
  return !g.is_identity(to_vec(g.sign));
}

KInvariantReport k_invariant(const GradedUnitGroup& g, const FiveTermSequence& s) {
  KInvariantReport r;
  r.nonzero = k_invariant_nonzero(g);
  if (r.nonzero) {
    r.reason = "-1 = " + g.word(to_vec(g.sign)) + " is nontrivial in (pi_0 E)^x, so pi_1 of the sphere acts "
               "nontrivially and the first k-invariant of bgl1*(E) is nonzero";
    const AbelianGroup z2{0, {Integer(2)}};
    if (s.pi0 == z2 && s.pi1 == z2) r.named_class = "Sq^2";
    if (s.periodicity == 0)
      r.notes.push_back("n = 0: pi_0 bgl1*(E) = Z, so the question of splitting off Z/n does not arise in the same form");
  } else {
    r.reason = "-1 is trivial in (pi_0 E)^x; the criterion does not apply and no claim is made";
  }
  return r;
}

ConnectiveCover connective_cover(const GradedUnitGroup& g) {
  g.check();
  const auto dk = degree_kernel(g);
  const auto lat = g.relation_lattice();
  ConnectiveCover c;
  c.inclusion = dk.basis;
  for (std::size_t j = 0; j < dk.basis.cols(); ++j)
    c.group.generators.push_back({"[" + g.word(column(dk.basis, j)) + "]", 0, 0});
  const auto rel = dk.coordinates * lat;
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    std::vector<std::int64_t> row;
    for (std::size_t r = 0; r < rel.rows(); ++r) {
      require_internal(rel.at(r, j).is_small(), "connective_cover: relation overflow");
      row.push_back(rel.at(r, j).small());
    }
    c.group.relations.push_back(std::move(row));
  }
  for (const auto& x : mat_vec(dk.coordinates, to_vec(g.sign))) {
    require_internal(x.is_small(), "connective_cover: sign overflow");
    c.group.sign.push_back(x.small());
  }
  if (c.group.generators.empty()) {
    c.group.generators.push_back({"1", 0, 1});
    c.group.relations.clear();
    c.group.sign = {0};
    c.inclusion = DenseMatrix(g.rank(), 1);
  }
  c.group.check();
  return c;
}

Gl1Report gl1_report(const GradedUnitGroup& g) {
  Gl1Report r;
  r.input = g;
  r.sequence = five_term(g);
  r.k_invariant = k_invariant(g, r.sequence);
  r.hopf = hopf_image(g);
  return r;
}

nlohmann::json Gl1Report::to_json() const {
  nlohmann::json j;
  j["schema"] = "glj.gl1/1";
  j["input"] = input.to_json();
  const PresentedGroup all{"(pi_* E)^x", input.rank(), input.relation_lattice()};
  j["units"] = all.structure().to_string();
  j["periodicity"] = sequence.periodicity;
  j["pi0"] = sequence.pi0.to_string();
  j["pi1"] = sequence.pi1.to_string();
  j["sequence"] = sequence.to_json();
  j["k_invariant"] = {{"nonzero", k_invariant.nonzero}, {"reason", k_invariant.reason}};
  if (k_invariant.named_class) j["k_invariant"]["class"] = *k_invariant.named_class;
  j["k_invariant"]["notes"] = k_invariant.notes;
  j["hopf_image"] = input.word(hopf);
  return j;
}

std::string Gl1Report::to_table() const {
  std::ostringstream os;
  auto row = [&](const std::string& k, const std::string& v) {
    os << k << std::string(k.size() < 18 ? 18 - k.size() : 1, ' ') << v << "\n";
  };
  std::string gens;
  for (const auto& g : input.generators)
    gens += (gens.empty() ? "" : ", ") + g.name + " (deg " + std::to_string(g.degree) +
            (g.order ? ", order " + std::to_string(g.order) : "") + ")";
  row("generators", gens);
  row("sign", input.word(to_vec(input.sign)));
  row("periodicity n", std::to_string(sequence.periodicity));
  row("pi_0 bgl1*", sequence.pi0.to_string());
  row("pi_1 bgl1*", sequence.pi1.to_string());
  std::string seq;
  for (const auto& g : sequence.groups) seq += g.structure().to_string() + " -> ";
  row("sequence", seq + "0");
  row("exact", std::string(sequence.ok() ? "yes" : "NO") + " (SNF)");
  row("k-invariant", k_invariant.nonzero ? "nonzero" + (k_invariant.named_class ? " = " + *k_invariant.named_class : "")
                                         : "criterion does not apply");
  for (const auto& n : k_invariant.notes) row("", n);
  row("hopf image", input.word(hopf));
  return os.str();
}

}  // namespace glj
