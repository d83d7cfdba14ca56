#include "glj/cli.hpp"

#include "glj/errors.hpp"
#include "glj/gammacat.hpp"
#include "glj/gl1.hpp"
#include "glj/jmonoid.hpp"
#include "glj/permcat.hpp"
#include "glj/simplicial.hpp"
#include "glj/topo.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace glj::cli {

namespace {

using json = nlohmann::json;

constexpr std::size_t kListCap = 10'000;

struct Ctx {
  explicit Ctx(const RunConfig& config) : c(config) {}
  const RunConfig& c;
  json window;
  json results = json::object();
  std::vector<std::string> warnings;
  std::vector<std::pair<std::string, std::string>> summary;
  std::string table;  // replaces the summary when set

  void say(const std::string& k, const std::string& v) { summary.emplace_back(k, v); }
};

std::vector<unsigned> parse_numbers(const std::string& s, const std::string& what) {
  std::vector<unsigned> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    require_input(!part.empty() && part.find_first_not_of("0123456789") == std::string::npos,
                  "bad " + what + " '" + s + "'");
    out.push_back(static_cast<unsigned>(std::stoul(part)));
  }
  require_input(!out.empty(), "empty " + what);
  return out;
}

KObject parse_object(const std::string& s, IndexKind kind) {
  require_input(!s.empty(), "missing object");
  const auto v = parse_numbers(s, "object");
  require_input(v.size() <= 2, "bad object '" + s + "'");
  KObject x{v[0], v.size() > 1 ? v[1] : (kind == IndexKind::J ? v[0] : 0u)};
  require_input(kind == IndexKind::J || x.m2 == 0, "objects of I and Sigma have one coordinate");
  return x;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require_input(in.good(), "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

IndexKind kind_of(const RunConfig& c) { return parse_index_kind(c.category); }

std::shared_ptr<const PermutativeWindow> make_window(Ctx& x) {
  const auto kind = kind_of(x.c);
  const unsigned b1 = x.c.bound1.value_or(x.c.max);
  const unsigned b2 = kind == IndexKind::J ? x.c.bound2.value_or(x.c.max) : 0;
  require_input(b1 + b2 > 0, "window bounds must be positive");
  require_input(b1 <= 12 && b2 <= 12, "window bounds above 12 are not supported");
  auto w = std::make_shared<const PermutativeWindow>(kind, b1, b2);
  x.window = {{"category", to_string(kind)}, {"bound1", b1}, {"bound2", b2}, {"objects", w->object_count()},
              {"morphisms", w->category().morphism_count()}};
  return w;
}

json object_json(const PermutativeWindow& w, ObjId x) {
  const auto o = w.object(x);
  if (w.kind() == IndexKind::J) return {o.m1, o.m2};
  return {o.m1};
}

// ------------------------------------------------------------- jcat

void cmd_jcat(Ctx& x) {
  const auto kind = kind_of(x.c);
  const auto src = parse_object(x.c.src, kind), dst = parse_object(x.c.dst, kind);
  if (x.c.action == "homs") {
    x.window = {{"category", to_string(kind)}, {"hom", {src.to_string(kind), dst.to_string(kind)}}};
    const auto n = k_hom_count(kind, src, dst);
    x.results["count"] = n;
    json list = json::array();
    if (n <= kListCap)
      for (const auto& f : k_homset(kind, src, dst)) list.push_back({{"rank", k_hom_rank(kind, f)}, {"morphism", to_json(f)}});
    else
      x.warnings.push_back("hom-set has " + std::to_string(n) + " elements; list omitted");
    x.results["morphisms"] = list;
    x.say("count", std::to_string(n));
    if (n <= 20)
      for (std::size_t i = 0; i < list.size(); ++i)
        x.say("  " + std::to_string(i), k_hom_unrank(kind, src, dst, i).to_string(kind));
  } else if (x.c.action == "compose") {
    const auto mid = parse_object(x.c.mid, kind);
    x.window = {{"category", to_string(kind)}, {"objects", {src.to_string(kind), mid.to_string(kind), dst.to_string(kind)}}};
    require_input(x.c.f < k_hom_count(kind, src, mid), "--f is not a rank in Hom(src, mid)");
    require_input(x.c.g < k_hom_count(kind, mid, dst), "--g is not a rank in Hom(mid, dst)");
    const auto f = k_hom_unrank(kind, src, mid, x.c.f), g = k_hom_unrank(kind, mid, dst, x.c.g);
    const auto gf = k_compose(kind, g, f);
    x.results = {{"f", to_json(f)}, {"g", to_json(g)}, {"composite", to_json(gf)}, {"rank", k_hom_rank(kind, gf)}};
    x.say("f", f.to_string(kind));
    x.say("g", g.to_string(kind));
    x.say("g o f", gf.to_string(kind) + " (rank " + std::to_string(k_hom_rank(kind, gf)) + ")");
  } else {
    throw InputError("jcat: action must be homs or compose");
  }
}

// ----------------------------------------------------- simplicial input

struct Space {
  TruncatedSimplicialSet sset;
  std::shared_ptr<const PermutativeWindow> window;  // null for file input
};

Space load_space(Ctx& x, int dim) {
  Space s;
  if (!x.c.sset_path.empty()) {
    s.sset = sset_from_json(read_json_file(x.c.sset_path));
    x.window = {{"sset", x.c.sset_path}, {"dim", s.sset.dim()}};
    require_input(s.sset.dim() >= dim, "the simplicial set is truncated below dimension " + std::to_string(dim));
    const auto problems = s.sset.check();
    require_input(problems.empty(), "simplicial set: " + (problems.empty() ? "" : problems.front()));
    return s;
  }
  s.window = make_window(x);
  s.sset = nerve(s.window->category(), dim).sset;
  x.window["nerve_dim"] = dim;
  return s;
}

// The vertex named by --component, or nullopt for "all".
std::optional<std::uint32_t> pick_vertex(Ctx& x, const Space& s) {
  const auto& sel = x.c.component;
  if (sel == "all") return std::nullopt;
  auto value = [&](const std::string& prefix) -> std::optional<long> {
    if (sel.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      return std::stol(sel.substr(prefix.size()));
    } catch (const std::exception&) {
      throw InputError("bad --component '" + sel + "'");
    }
  };
  if (auto d = value("deg=")) {
    require_input(s.window != nullptr, "--component deg= needs a category window");
    for (ObjId o = 0; o < s.window->object_count(); ++o)
      if (s.window->degree(o) == *d) return o;
    throw WindowError("no object of degree " + std::to_string(*d) + " in the window");
  }
  if (auto v = value("vertex=")) {
    require_input(*v >= 0 && std::size_t(*v) < s.sset.count(0), "--component vertex out of range");
    return std::uint32_t(*v);
  }
  throw InputError("--component must be all, deg=d or vertex=v");
}

void cmd_nerve(Ctx& x) {
  const int dim = x.c.dim < 0 ? 2 : x.c.dim;
  require_input(dim <= 6, "--dim above 6 is not supported");
  const auto s = load_space(x, dim);
  json counts = json::array();
  for (int n = 0; n <= dim; ++n) counts.push_back(s.sset.count(n));
  std::size_t comps = 0;
  components(s.sset, &comps);
  x.results = {{"dim", dim}, {"nondegenerate", counts}, {"components", comps}};
  if (x.c.emit_sset) x.results["sset"] = to_json(s.sset);
  x.say("nondegenerate simplices", counts.dump());
  x.say("components", std::to_string(comps));
}

void cmd_components(Ctx& x) {
  const auto s = load_space(x, x.c.dim < 0 ? 1 : x.c.dim);
  std::size_t count = 0;
  const auto comp = components(s.sset, &count);
  std::vector<std::size_t> size(count, 0);
  std::vector<std::optional<int>> degree(count);
  std::vector<bool> mixed(count, false);
  for (std::uint32_t v = 0; v < comp.size(); ++v) {
    ++size[comp[v]];
    if (s.window) {
      const int d = s.window->degree(v);
      if (degree[comp[v]] && *degree[comp[v]] != d) mixed[comp[v]] = true;
      degree[comp[v]] = d;
    }
  }
  json list = json::array();
  for (std::size_t c = 0; c < count; ++c) {
    json e = {{"vertices", size[c]}};
    if (s.window) {
      require_internal(!mixed[c], "a component of the nerve contains two degrees");
      e["degree"] = *degree[c];
    }
    list.push_back(e);
  }
  x.results = {{"count", count}, {"components", list}};
  x.say("components", std::to_string(count));
  if (s.window) {
    std::string ds;
    for (const auto& d : degree) ds += (ds.empty() ? "" : " ") + std::to_string(*d);
    x.say("degrees", ds);
  }
}

void cmd_homology(Ctx& x) {
  require_input(x.c.degree >= 0, "--degree must be nonnegative");
  const int dim = x.c.dim < 0 ? x.c.degree + 1 : x.c.dim;
  require_input(dim >= x.c.degree + 1, "--dim must be at least degree + 1");
  const auto s = load_space(x, dim);
  const auto v = pick_vertex(x, s);
  HomologyStats stats;
  AbelianGroup h;
  if (v) {
    const auto r = restrict_to_component(s.sset, *v);
    h = homology(r.sset, x.c.degree, Exec::parallel, &stats);
    x.results["component_simplices"] = r.sset.count(0);
  } else {
    h = homology(s.sset, x.c.degree, Exec::parallel, &stats);
  }
  x.results["component"] = x.c.component;
  x.results["degree"] = x.c.degree;
  x.results["homology"] = h.to_json();
  x.results["group"] = h.to_string();
  x.results["boundary_ranks"] = {stats.boundary_rank_n, stats.boundary_rank_next};
  x.say("H_" + std::to_string(x.c.degree) + " (" + x.c.component + ")", h.to_string());
}

void cmd_pi1(Ctx& x) {
  const int dim = x.c.dim < 0 ? 2 : x.c.dim;
  require_input(dim >= 2, "--dim must be at least 2 for pi1");
  const auto s = load_space(x, dim);
  const auto v = pick_vertex(x, s).value_or(0);
  const auto p = pi1_presentation(s.sset, v);
  const auto ab = abelianize(p.presentation);
  const auto r = restrict_to_component(s.sset, v);
  const auto h1 = homology(r.sset, 1);
  x.results = {{"basepoint", v},
               {"presentation", p.presentation.to_json()},
               {"abelianization", ab.to_string()},
               {"h1", h1.to_string()},
               {"agree", ab == h1}};
  require_internal(ab == h1, "abelianized pi1 differs from H1");
  x.say("generators", std::to_string(p.presentation.generators));
  x.say("relators", std::to_string(p.presentation.relators.size()));
  x.say("abelianization", ab.to_string());
}

// ------------------------------------------------------------- HK / Γ

HKOptions hk_options(const RunConfig& c) {
  HKOptions o;
  o.mode = parse_hk_mode(c.mode);
  return o;
}

BasedMap parse_alpha(const std::string& s, unsigned k) {
  if (s.empty()) return BasedMap::fold(k);
  std::string body = s;
  std::optional<unsigned> target;
  if (auto colon = s.find(':'); colon != std::string::npos) {
    target = parse_numbers(s.substr(0, colon), "based map")[0];
    body = s.substr(colon + 1);
  }
  const auto v = parse_numbers(body, "based map");
  require_input(v.size() == k, "--alpha must list k values");
  BasedMap a;
  a.source = k;
  a.values = {0};
  unsigned mx = 0;
  for (auto t : v) a.values.push_back(t), mx = std::max(mx, t);
  a.target = target.value_or(mx);
  a.check();
  return a;
}

void cmd_bgamma(Ctx& x) {
  auto w = make_window(x);
  const auto opts = hk_options(x.c);
  x.window["k"] = x.c.k;
  x.window["mode"] = to_string(opts.mode);
  const auto hk = std::make_shared<const HKCategory>(w, x.c.k, opts);
  const auto ax = hk->check_axioms();
  const auto ev = check_evaluation(*hk);
  x.results["objects"] = hk->object_count();
  x.results["morphisms"] = hk->morphism_count();
  x.results["axioms"] = {{"ok", ax.ok()},
                         {"objects_checked", ax.objects_checked},
                         {"equations_checked", ax.equations_checked},
                         {"violations", ax.violations}};
  x.results["evaluation"] = ev.to_json();
  x.say("HK objects", std::to_string(hk->object_count()));
  x.say("HK morphisms", std::to_string(hk->morphism_count()));
  x.say("axioms (i)-(iv)", ax.ok() ? "hold" : "FAIL");
  x.say("evaluation full", ev.full ? "yes" : "no");
  x.say("evaluation essentially surjective", ev.essentially_surjective ? "yes" : "no");
  if (x.c.k == 2) {
    const auto sp = bgamma_specialness(w, opts);
    x.results["specialness"] = sp.to_json();
    x.say("pi0 X(2+) -> pi0 X(1+)^2 injective", sp.injective ? "yes" : "no");
    x.say("image / boundary pairs", std::to_string(sp.image.size()) + " / " + std::to_string(sp.missing.size()));
    if (!sp.missing.empty())
      x.warnings.push_back(std::to_string(sp.missing.size()) + " degree pairs not reached inside the window");
  }
  if (x.c.dim >= 0) {
    require_input(hk->has_category(), "HK is too large to build a nerve");
    const auto n = nerve(hk->category(), x.c.dim);
    json counts = json::array();
    for (int d = 0; d <= x.c.dim; ++d) counts.push_back(n.sset.count(d));
    x.results["nerve"] = counts;
  }
}

struct MonoidInput {
  std::optional<FreeMonoid> free;
  std::optional<TabulatedMonoid> plain;
  const TabulatedMonoid& get() const { return free ? free->monoid : *plain; }
};

MonoidInput load_monoid(Ctx& x) {
  MonoidInput m;
  const int sources = !x.c.generator.empty() + !x.c.monoid_path.empty() + x.c.terminal;
  require_input(sources == 1, "give exactly one of --generator, --monoid, --terminal");
  if (!x.c.monoid_path.empty()) {
    m.plain = monoid_from_json(read_json_file(x.c.monoid_path));
    const auto& w = m.plain->window();
    x.window = {{"category", to_string(w.kind())}, {"bound1", w.bound1()}, {"bound2", w.bound2()},
                {"source", x.c.monoid_path}};
  } else if (x.c.terminal) {
    m.plain = terminal_monoid(make_window(x));
    x.window["monoid"] = "terminal";
  } else {
    const auto g = parse_object(x.c.generator, IndexKind::J);
    require_input(x.c.category == "j" || x.c.category == "J", "free monoids live over J");
    m.free = free_monoid(g, make_window(x));
    x.window["monoid"] = "free(" + g.to_string(IndexKind::J) + ")";
    for (const auto& s : m.free->warnings) x.warnings.push_back(s);
  }
  MonoidCheckOptions mo;
  mo.seed = x.c.seed;
  const auto rep = m.get().check(mo);
  require_internal(rep.ok(), "monoid laws fail: " + (rep.violations.empty() ? "" : rep.violations.front()));
  x.results["laws"] = {{"ok", rep.ok()}, {"exhaustive", rep.exhaustive}, {"instances", rep.instances_checked}};
  return m;
}

void cmd_gamma(Ctx& x) {
  const auto m = load_monoid(x);
  const auto& a = m.get();
  x.window["k"] = x.c.k;
  const auto alpha = parse_alpha(x.c.alpha, x.c.k);
  const auto gs = gamma_value(a, x.c.k), gt = gamma_value(a, alpha.target);
  std::size_t comps = 0;
  object_components(gs.elements.category, &comps);
  x.results["hk_objects"] = gs.hk->object_count();
  x.results["elements"] = {{"objects", gs.elements.category.object_count()},
                           {"morphisms", gs.elements.category.morphism_count()},
                           {"components", comps}};
  const auto asc = gamma_structure_map(alpha, a, gs, gt, false);
  const auto desc = gamma_structure_map(alpha, a, gs, gt, true);
  const bool same = asc.functor.object_map == desc.functor.object_map &&
                    asc.functor.morphism_map == desc.functor.morphism_map;
  x.results["structure_map"] = {{"alpha", to_string(alpha)},
                                {"unmapped_objects", asc.unmapped_objects},
                                {"order_independent", same},
                                {"functor_problems", asc.functor.check()}};
  x.say("El objects / morphisms", std::to_string(gs.elements.category.object_count()) + " / " +
                                      std::to_string(gs.elements.category.morphism_count()));
  x.say("components", std::to_string(comps));
  x.say("structure map " + to_string(alpha), same ? "independent of fiber order" : "DEPENDS on fiber order");
  if (asc.unmapped_objects) x.warnings.push_back(std::to_string(asc.unmapped_objects) + " elements map outside the window");
  if (x.c.k == 2) {
    const auto sp = gamma_specialness(a);
    x.results["specialness"] = sp.to_json();
    x.say("pi0 specialness injective", sp.injective ? "yes" : "no");
  }
  if (x.c.circle) {
    const int dim = x.c.dim < 0 ? 2 : x.c.dim;
    const auto c = gamma_circle(a, dim);
    json h = json::object();
    for (int n = 0; n < dim; ++n)
      h[std::to_string(n)] = {{"diagonal", homology(c.diagonal, n).to_string()}, {"bar", homology(c.bar, n).to_string()}};
    x.results["circle"] = {{"dim", dim}, {"level_simplices", c.level_simplices}, {"homology", h}};
    x.say("gamma(S^1) H_1 / bar H_1", h["1"]["diagonal"].get<std::string>() + " / " + h["1"]["bar"].get<std::string>());
  }
}

void pi0_results(Ctx& x, const MonoidInput& in, const Pi0Monoid& m) {
  x.results["pi0"] = m.to_json();
  x.say("classes", std::to_string(m.size));
  if (in.get().window().kind() == IndexKind::J) {
    const auto d = degree_homomorphism(in.get(), m);
    x.results["degree"] = {{"per_class", d.degree}, {"additive", d.additive}, {"products_checked", d.products_checked}};
    std::string ds;
    for (std::size_t c = 0; c < m.size; ++c) ds += (c ? " " : "") + m.labels[c] + "->" + std::to_string(d.degree[c]);
    x.say("degree", ds);
    x.say("degree additive", d.additive ? "yes" : "no");
  }
}

void cmd_freemonoid(Ctx& x) {
  require_input(!x.c.generator.empty(), "freemonoid needs --generator");
  const auto in = load_monoid(x);
  const auto& f = *in.free;
  const auto& w = f.monoid.window();
  json values = json::array();
  for (ObjId o = 0; o < w.object_count(); ++o) {
    std::map<unsigned, std::size_t> by_length;
    for (auto l : f.length[o]) ++by_length[l];
    json bl = json::object();
    for (auto [l, n] : by_length) bl[std::to_string(l)] = n;
    values.push_back({{"object", object_json(w, o)}, {"size", f.monoid.size(o)}, {"by_length", bl}});
  }
  x.results["max_length"] = f.max_length;
  x.results["values"] = values;
  x.say("max word length", std::to_string(f.max_length));
  x.say("elements", std::to_string(f.monoid.element_count()));
  const auto m = pi0_hocolim(f.monoid);
  pi0_results(x, in, m);
  if (x.c.h1) {
    const auto h = hocolim_h1(f.monoid, m);
    json list = json::array();
    for (std::uint32_t c = 0; c < m.size; ++c) {
      const auto [k, p] = m.representative[c];
      list.push_back({{"class", m.labels[c]}, {"length", f.length[k][p]}, {"h1", h[c].to_string()}});
      x.say("H_1 of component p=" + std::to_string(f.length[k][p]), h[c].to_string());
    }
    x.results["h1"] = list;
  }
}

void cmd_pi0(Ctx& x) {
  const auto in = load_monoid(x);
  pi0_results(x, in, pi0_hocolim(in.get()));
}

void cmd_units(Ctx& x) {
  const auto in = load_monoid(x);
  const auto m = pi0_hocolim(in.get());
  const auto st = unit_status(m, x.c.saturation);
  x.window["saturation"] = x.c.saturation ? x.c.saturation : 2 * m.window_diameter;
  json list = json::array();
  std::size_t unknown = 0;
  for (std::size_t c = 0; c < m.size; ++c) {
    json e = {{"class", m.labels[c]}, {"status", to_string(st[c].status)}};
    if (st[c].status == UnitStatus::unit) {
      json w = json::array();
      for (auto y : st[c].certificate) w.push_back(m.labels[y]);
      e["certificate"] = w;
    }
    unknown += st[c].status == UnitStatus::unknown;
    list.push_back(e);
    x.say(m.labels[c], to_string(st[c].status));
  }
  if (unknown) x.warnings.push_back(std::to_string(unknown) + " classes undecided at this saturation bound");
  x.results["units"] = list;
}

void cmd_grouplike(Ctx& x) {
  const auto in = load_monoid(x);
  const auto m = pi0_hocolim(in.get());
  const auto g = grouplike_check(m, x.c.saturation);
  x.window["saturation"] = x.c.saturation ? x.c.saturation : 2 * m.window_diameter;
  x.results["grouplike"] = g.to_json();
  x.say("grouplike", g.grouplike ? "yes" : "no");
  if (g.first_failure) x.say("first non-unit", m.labels[*g.first_failure] + " (" + to_string(g.failure_status) + ")");
  x.say("shear map injective", g.shear_injective ? "yes" : "no");
}

void cmd_gl1(Ctx& x) {
  require_input(!x.c.ring_path.empty(), "gl1 needs --ring");
  const auto g = GradedUnitGroup::from_json(read_json_file(x.c.ring_path));
  const auto r = gl1_report(g);
  x.window = {{"ring", x.c.ring_path}, {"units", "finitely presented, as given"}};
  x.results = r.to_json();
  x.results.erase("schema");
  x.table = r.to_table();
}

json echo(const RunConfig& c) {
  json j = {{"command", c.command}};
  if (!c.action.empty()) j["action"] = c.action;
  j["category"] = c.category;
  j["max"] = c.max;
  if (c.bound1) j["bound1"] = *c.bound1;
  if (c.bound2) j["bound2"] = *c.bound2;
  auto opt = [&](const char* k, const std::string& v) {
    if (!v.empty()) j[k] = v;
  };
  opt("src", c.src);
  opt("mid", c.mid);
  opt("dst", c.dst);
  opt("sset", c.sset_path);
  opt("generator", c.generator);
  opt("monoid", c.monoid_path);
  opt("ring", c.ring_path);
  opt("alpha", c.alpha);
  if (c.command == "jcat" && c.action == "compose") j["f"] = c.f, j["g"] = c.g;
  j["dim"] = c.dim;
  j["degree"] = c.degree;
  j["component"] = c.component;
  j["k"] = c.k;
  j["mode"] = c.mode;
  j["terminal"] = c.terminal;
  j["saturation"] = c.saturation;
  j["seed"] = c.seed;
  return j;
}

}  // namespace

Report run(const RunConfig& config) {
  static const std::map<std::string, std::function<void(Ctx&)>> commands = {
      {"jcat", cmd_jcat},       {"nerve", cmd_nerve},           {"components", cmd_components},
      {"homology", cmd_homology}, {"pi1", cmd_pi1},             {"bgamma", cmd_bgamma},
      {"gamma", cmd_gamma},     {"freemonoid", cmd_freemonoid}, {"pi0", cmd_pi0},
      {"units", cmd_units},     {"grouplike", cmd_grouplike},   {"gl1", cmd_gl1}};
  Report r;
  Ctx x(config);
  // replaced by the resolved window once a handler has one
  x.window = {{"requested", {{"category", config.category}, {"max", config.max}}}};
  if (config.bound1) x.window["requested"]["bound1"] = *config.bound1;
  if (config.bound2) x.window["requested"]["bound2"] = *config.bound2;
  try {
    const auto it = commands.find(config.command);
    require_input(it != commands.end(), "unknown command '" + config.command + "'");
    it->second(x);
  } catch (const InputError& e) {
    r.exit_code = 2, r.error = e.what();
  } catch (const WindowError& e) {
    r.exit_code = 3, r.error = e.what();
  } catch (const InternalError& e) {
    r.exit_code = 4, r.error = e.what();
  } catch (const std::bad_alloc&) {
    r.exit_code = 3, r.error = "out of memory; use a smaller window";
  } catch (const std::exception& e) {
    r.exit_code = 4, r.error = e.what();
  }
  r.json = {{"schema", "glj.report/1"}, {"inputs", echo(config)}, {"window", x.window}};
  if (r.exit_code == 0) {
    r.json["results"] = x.results;
  } else {
    r.json["error"] = {{"code", r.exit_code}, {"message", r.error}};
  }
  r.json["warnings"] = x.warnings;

  std::ostringstream os;
  os << config.command << (config.action.empty() ? "" : " " + config.action) << "  window " << x.window.dump() << "\n";
  if (r.exit_code) {
    os << "error (" << r.exit_code << "): " << r.error << "\n";
  } else if (!x.table.empty()) {
    os << x.table;
  } else {
    std::size_t wdt = 0;
    for (const auto& [k, v] : x.summary) wdt = std::max(wdt, k.size());
    for (const auto& [k, v] : x.summary) os << k << std::string(wdt + 2 - k.size(), ' ') << v << "\n";
  }
  for (const auto& w : x.warnings) os << "warning: " << w << "\n";
  r.text = os.str();
  return r;
}

std::string render(const Report& r, const std::string& format) {
  if (format == "text") return r.text;
  return r.json.dump(2) + "\n";
}

}  // namespace glj::cli
