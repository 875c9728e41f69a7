#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>

#include "support.hpp"

using namespace t;

namespace {

const CheckReport& find(const std::vector<CheckReport>& rs, const std::string& id) {
  for (auto& r : rs)
    if (r.id == id) return r;
  throw std::runtime_error("missing report " + id);
}

// Line {s (1, i, 0, 0, 0) + t (0, 0, 1, i, 0)} on the diagonal quadric, given as binary forms.
const char* kOverlay = R"({
  "curves": {
    "test.line": {"kind": "param", "x": [["1", "0"], ["z4", "0"], ["0", "1"], ["0", "z4"], ["0", "0"]]}
  },
  "checks": [
    {"id": "overlay.line.X1", "kind": "contains", "category": "containment", "topic": "overlay",
     "forms": ["X1"], "curve": "test.line", "expect": {"contained": true, "orbit_size": 1, "curve_degree": 1}},
    {"id": "overlay.line.X2", "kind": "contains", "category": "containment", "topic": "overlay",
     "forms": ["X2"], "curve": "test.line", "expect": {"contained": true}}
  ]
})";

}  // namespace

TEST_CASE("selection") {
  Runner r(RunConfig{});
  CHECK(r.conductor() == 120);
  CHECK(r.select("orbit.std.*").size() == 6);
  CHECK(r.select("").size() == r.ids().size());
  CHECK_THROWS_AS(r.select("no.such.*"), Error);
  CHECK(r.describe("lattice.detA").at("kind") == "lattice_det");
  CHECK_THROWS_AS(r.describe("nope"), Error);
}

TEST_CASE("passing checks") {
  Runner r(RunConfig{});
  auto rs = r.run("orbit.std.*");
  CHECK(rs.size() == 6);
  for (auto& x : rs) CHECK(x.status == Status::pass);
  auto d = r.run("lattice.detA");
  REQUIRE(d.size() == 1);
  CHECK(d[0].status == Status::pass);
  CHECK(d[0].computed.at("value") == "186");
  CHECK(exit_code(d) == 0);
  auto j = ojson::parse(emit_json(d, false));
  CHECK(j.at("checks").at(0).at("status") == "pass");
  CHECK_FALSE(j.at("checks").at(0).contains("seconds"));
  CHECK(j.at("summary").at("pass") == 1);
}

TEST_CASE("skipped check without the external curve") {
  Runner r(RunConfig{});
  auto rs = r.run("basefree.*");
  auto& c8 = find(rs, "basefree.X2.C8");
  CHECK(c8.status == Status::skipped);
  CHECK(c8.reason.find("--registry") != std::string::npos);
  CHECK(find(rs, "basefree.Y2.L6").status == Status::pass);
  CHECK(exit_code(rs) == 0);
}

TEST_CASE("inline overlay with a parametrized curve") {
  RunConfig cfg;
  cfg.overlay = kOverlay;
  Runner r(cfg);
  auto rs = r.run("overlay.*");
  CHECK(find(rs, "overlay.line.X1").status == Status::pass);
  // the line does not lie on X2: a failing check with a diff
  auto& bad = find(rs, "overlay.line.X2");
  CHECK(bad.status == Status::fail);
  REQUIRE_FALSE(bad.diff.empty());
  CHECK(bad.diff[0].find("contained") != std::string::npos);
  CHECK(exit_code(rs) == 1);
  // an overlay entry with an existing id replaces that check
  ojson det = r.describe("lattice.detA");
  det["expect"]["value"] = "187";
  RunConfig cfg2;
  cfg2.overlay = ojson{{"checks", {det}}}.dump();
  Runner r2(cfg2);
  auto d = r2.run("lattice.detA");
  CHECK(d[0].status == Status::fail);
  auto md = emit_markdown(d);
  CHECK(md.find("```") != std::string::npos);
  CHECK(md.find("lattice.detA") != std::string::npos);
}

TEST_CASE("registry file and environment override") {
  std::string path = "runner_overlay_test.json";
  {
    std::ofstream out(path);
    out << kOverlay;
  }
  RunConfig cfg;
  cfg.registry_path = path;
  Runner r(cfg);
  CHECK(r.select("overlay.*").size() == 2);
  setenv(kRegistryEnv, path.c_str(), 1);
  Runner e(RunConfig{});
  CHECK(e.select("overlay.*").size() == 2);
  unsetenv(kRegistryEnv);
  std::remove(path.c_str());
  RunConfig missing;
  missing.registry_path = "does/not/exist.json";
  CHECK_THROWS_AS(Runner{missing}, Error);
  RunConfig broken;
  broken.overlay = "{ not json";
  CHECK_THROWS_AS(Runner{broken}, Error);
}

TEST_CASE("deterministic output across job counts") {
  Runner r(RunConfig{});
  auto a = emit_json(r.run("orbit.*", 1), false);
  auto b = emit_json(r.run("orbit.*", 4), false);
  CHECK(a == b);
}

TEST_CASE("cremona entry point") {
  Runner r(RunConfig{});
  auto j = r.cremona("A5-nonstandard", "X2.S5p", "");
  CHECK(j.at("solution_dim") == 1);
  CHECK(j.at("equivariant") == true);
  CHECK(j.at("roundtrip") == true);
  CHECK(j.contains("quadric"));
  CHECK_THROWS_AS(r.cremona("A5-nonstandard", "[1,2,3]", ""), Error);
  CHECK_THROWS_AS(r.cremona("A5-nonstandard", "X2.S5p", "f1"), Error);
}

TEST_CASE("conductor option") {
  RunConfig cfg;
  cfg.conductor = -3;
  CHECK_THROWS_AS(Runner{cfg}, Error);
}
