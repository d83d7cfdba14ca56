#pragma once

// Command-line orchestration. run() is the whole tool minus argument
// parsing and file output, so it can be driven from tests.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace glj::cli {

struct RunConfig {
  std::string command;  // jcat, nerve, components, homology, pi1, bgamma, gamma, freemonoid, pi0, units, grouplike, gl1
  std::string action;   // jcat: homs | compose

  // window
  std::string category = "j";
  unsigned max = 2;  // bound for both coordinates unless bound1/bound2 are given
  std::optional<unsigned> bound1, bound2;

  // jcat
  std::string src, mid, dst;  // objects "m1,m2" (or "m" for I and Σ)
  std::uint64_t f = 0, g = 0;  // ranks in Hom(src, mid), Hom(mid, dst)

  // nerve / homology
  int dim = -1;  // nerve dimension cap; -1: degree + 1 (or 2)
  int degree = 1;
  std::string component = "all";  // all | deg=d | vertex=v
  std::string sset_path;           // read a simplicial set instead of a window nerve
  bool emit_sset = false;

  // HK / Γ
  unsigned k = 2;
  std::string mode = "uniform";
  std::string alpha;  // based map "k>l:v1,...,vk"; default fold
  bool circle = false;

  // monoids
  std::string generator;    // free monoid on this J-object
  std::string monoid_path;  // glj.monoid/1 file
  bool terminal = false;
  std::size_t saturation = 0;  // unit search bound; 0: twice the window diameter
  bool h1 = false;

  // gl1
  std::string ring_path;

  std::uint64_t seed = 1;
  std::string format = "json";  // json | text
};

struct Report {
  int exit_code = 0;
  nlohmann::json json;  // schema glj.report/1
  std::string text;     // human-readable rendering
  std::string error;
};

// Never throws: errors become exit codes 2 (input), 3 (window), 4 (internal).
Report run(const RunConfig& config);

std::string render(const Report& r, const std::string& format);

}  // namespace glj::cli
