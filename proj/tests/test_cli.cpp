#include "glj/cli.hpp"

#include <doctest.h>

using glj::cli::RunConfig;
using glj::cli::run;

namespace {

RunConfig cfg(const std::string& command) {
  RunConfig c;
  c.command = command;
  return c;
}

const std::string data = GLJ_DATA_DIR;

}  // namespace

TEST_CASE("cli: jcat homs") {
  auto c = cfg("jcat");
  c.action = "homs";
  c.src = "1,1";
  c.dst = "2,2";
  const auto r = run(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.json["schema"] == "glj.report/1");
  CHECK(r.json["results"]["count"] == 4);
  CHECK(r.json["results"]["morphisms"].size() == 4);
  CHECK(r.json["window"]["hom"].size() == 2);
  c.dst = "2,3";
  CHECK(run(c).json["results"]["count"] == 0);
}

TEST_CASE("cli: jcat compose") {
  auto c = cfg("jcat");
  c.action = "compose";
  c.src = "0,1";
  c.mid = "1,2";
  c.dst = "2,3";
  c.f = 1;
  c.g = 3;
  const auto r = run(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.json["results"].contains("composite"));
  c.f = 1000;
  CHECK(run(c).exit_code == 2);
}

TEST_CASE("cli: gl1 on KU and the sphere") {
  auto c = cfg("gl1");
  c.ring_path = data + "/ku.json";
  auto r = run(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.json["results"]["periodicity"] == 2);
  CHECK(r.json["results"]["pi0"] == "Z/2");
  CHECK(r.json["results"]["pi1"] == "Z/2");
  CHECK(r.json["results"]["k_invariant"]["nonzero"] == true);
  CHECK(r.text.find("Sq^2") != std::string::npos);
  c.ring_path = data + "/sphere.json";
  r = run(c);
  CHECK(r.json["results"]["pi0"] == "Z");
  CHECK(r.json["results"]["hopf_image"] == "t");
}

TEST_CASE("cli: homology of the degree-0 component") {
  auto c = cfg("homology");
  c.max = 3;
  c.component = "deg=0";
  c.degree = 1;
  const auto r = run(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.json["results"]["group"] == "Z/2");
  CHECK(r.json["window"]["bound1"] == 3);
}

TEST_CASE("cli: components and pi1") {
  auto c = cfg("components");
  c.max = 2;
  auto r = run(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.json["results"]["count"] == 5);
  c = cfg("pi1");
  c.component = "deg=1";
  r = run(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.json["results"]["agree"] == true);
}

TEST_CASE("cli: monoid commands") {
  auto c = cfg("freemonoid");
  c.generator = "1,2";
  c.bound1 = 2;
  c.bound2 = 4;
  auto r = run(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.json["results"]["max_length"] == 2);
  CHECK(r.json["results"]["degree"]["additive"] == true);
  c.command = "grouplike";
  r = run(c);
  CHECK(r.json["results"]["grouplike"]["grouplike"] == false);
  c.command = "units";
  r = run(c);
  CHECK(r.json["results"]["units"][0]["status"] == "UNIT");
  c.command = "gamma";
  c.bound1 = 1;
  c.bound2 = 2;
  r = run(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.json["results"]["structure_map"]["order_independent"] == true);
}

TEST_CASE("cli: bgamma") {
  auto c = cfg("bgamma");
  c.max = 2;
  const auto r = run(c);
  REQUIRE(r.exit_code == 0);
  CHECK(r.json["results"]["objects"] == 81);
  CHECK(r.json["results"]["specialness"]["boundary_missing"].size() == 6);
  CHECK(!r.json["warnings"].empty());
}

TEST_CASE("cli: exit codes") {
  auto c = cfg("nerve");
  c.category = "q";
  auto r = run(c);
  CHECK(r.exit_code == 2);
  CHECK(r.json["window"].contains("requested"));
  CHECK(run(cfg("nope")).exit_code == 2);
  c = cfg("gl1");
  c.ring_path = "/nonexistent.json";
  CHECK(run(c).exit_code == 2);
  c = cfg("homology");
  c.component = "deg=9";
  CHECK(run(c).exit_code == 3);
  c = cfg("bgamma");
  c.k = 4;
  CHECK(run(c).exit_code == 2);
  c = cfg("homology");
  c.degree = 2;
  c.dim = 2;
  CHECK(run(c).exit_code == 2);
}

TEST_CASE("cli: reports are deterministic") {
  auto c = cfg("pi1");
  c.max = 2;
  CHECK(glj::cli::render(run(c), "json") == glj::cli::render(run(c), "json"));
  c = cfg("freemonoid");
  c.generator = "1,1";
  CHECK(glj::cli::render(run(c), "text") == glj::cli::render(run(c), "text"));
}
