#include "glj/cli.hpp"
#include "glj/parallel.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using glj::cli::RunConfig;

void window_options(CLI::App* app, RunConfig& c) {
  app->add_option("--cat", c.category, "i, sigma or j")->capture_default_str();
  app->add_option("--max", c.max, "window bound for both coordinates")->capture_default_str();
  app->add_option("--bound1", c.bound1, "bound on the first coordinate (overrides --max)");
  app->add_option("--bound2", c.bound2, "bound on the second coordinate, J only (overrides --max)");
}

void space_options(CLI::App* app, RunConfig& c) {
  window_options(app, c);
  app->add_option("--sset", c.sset_path, "read a glj.sset/1 file instead of a window nerve");
  app->add_option("--dim", c.dim, "nerve dimension cap (default: degree + 1, or 2)");
  app->add_option("--component", c.component, "all | deg=d | vertex=v")->capture_default_str();
}

void monoid_options(CLI::App* app, RunConfig& c) {
  window_options(app, c);
  app->add_option("--generator", c.generator, "free commutative monoid on this J-object, e.g. 1,2");
  app->add_option("--monoid", c.monoid_path, "read a glj.monoid/1 file");
  app->add_flag("--terminal", c.terminal, "the terminal monoid on the window");
  app->add_option("--saturation", c.saturation, "unit search bound (0: twice the window diameter)")
      ->capture_default_str();
}

bool write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return false;
    out << text;
    if (!out) return false;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  return !ec;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  std::string output;
  int threads = 0;
  bool quiet = false;

  CLI::App app{"glj: truncated I/Sigma/J, their nerves, Gamma-categories and graded units"};
  app.require_subcommand(1);
  app.add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--output", output, "write the report here instead of stdout");
  app.add_option("--seed", c.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--threads", threads, "OpenMP threads (default: GLJ_NUM_THREADS or the OpenMP default)");
  app.add_flag("--quiet", quiet, "no timing line on stderr");

  auto* jcat = app.add_subcommand("jcat", "hom-sets and composition in I, Sigma or J");
  jcat->add_option("action", c.action, "homs or compose")->required()->check(CLI::IsMember({"homs", "compose"}));
  jcat->add_option("--cat", c.category, "i, sigma or j")->capture_default_str();
  jcat->add_option("--src", c.src, "source object, e.g. 1,1")->required();
  jcat->add_option("--mid", c.mid, "middle object (compose)");
  jcat->add_option("--dst", c.dst, "target object")->required();
  jcat->add_option("--f", c.f, "rank of f in Hom(src, mid)");
  jcat->add_option("--g", c.g, "rank of g in Hom(mid, dst)");

  auto* nerve = app.add_subcommand("nerve", "nondegenerate simplex counts of a window nerve");
  space_options(nerve, c);
  nerve->add_flag("--emit-sset", c.emit_sset, "include the simplicial set in the report");

  auto* comps = app.add_subcommand("components", "path components");
  space_options(comps, c);

  auto* hom = app.add_subcommand("homology", "integral homology via Smith normal form");
  space_options(hom, c);
  hom->add_option("--degree", c.degree, "homology degree")->capture_default_str();

  auto* pi1 = app.add_subcommand("pi1", "edge-path presentation of pi_1 and its abelianization");
  space_options(pi1, c);

  auto* bg = app.add_subcommand("bgamma", "HK(k+) over a window: axioms, evaluation, specialness");
  window_options(bg, c);
  bg->add_option("--k", c.k, "size of the based set")->capture_default_str();
  bg->add_option("--mode", c.mode, "uniform or product")->capture_default_str();
  bg->add_option("--dim", c.dim, "also count nerve simplices up to this dimension");

  auto* gm = app.add_subcommand("gamma", "gamma(A) of a monoid: elements, structure maps, specialness");
  monoid_options(gm, c);
  gm->add_option("--k", c.k, "size of the based set")->capture_default_str();
  gm->add_option("--alpha", c.alpha, "based map k+ -> l+ as [l:]v1,...,vk (default: fold)");
  gm->add_flag("--circle", c.circle, "also evaluate on the simplicial circle");
  gm->add_option("--dim", c.dim, "truncation for --circle (default 2)");

  auto* fm = app.add_subcommand("freemonoid", "free commutative J-space monoid on one generator");
  monoid_options(fm, c);
  fm->add_flag("--h1", c.h1, "H_1 of every component of the homotopy colimit");

  monoid_options(app.add_subcommand("pi0", "pi_0 of the homotopy colimit with its degree map"), c);
  monoid_options(app.add_subcommand("units", "unit status of each pi_0 class"), c);
  monoid_options(app.add_subcommand("grouplike", "is pi_0 of the homotopy colimit a group"), c);

  auto* gl1 = app.add_subcommand("gl1", "graded units: periodicity, five-term sequence, k-invariant");
  gl1->add_option("--ring", c.ring_path, "glj.units/1 file")->required();
  gl1->add_flag("--report", "accepted for symmetry; the report is always produced");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (threads > 0) glj::set_num_threads(threads);

  const auto t0 = std::chrono::steady_clock::now();
  const auto report = glj::cli::run(c);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const auto text = glj::cli::render(report, c.format);
  if (output.empty()) {
    std::cout << text;
  } else if (!write_atomically(output, text)) {
    std::cerr << "glj: cannot write " << output << "\n";
    return 2;
  }
  if (report.exit_code) std::cerr << "glj: " << report.error << "\n";
  if (!quiet) std::fprintf(stderr, "glj %s: %.3f s, %d threads\n", c.command.c_str(), secs, glj::num_threads());
  return report.exit_code;
}
