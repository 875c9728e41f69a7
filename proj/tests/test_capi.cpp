#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "a5geom.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  a5g_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("render literals") {
  char* out = nullptr;
  REQUIRE(a5g_cyc_render("z4*z4", 120, &out) == A5G_OK);
  CHECK(take(out) == "-1");
  REQUIRE(a5g_cyc_render("z5 + z5^2 + z5^3 + z5^4", 5, &out) == A5G_OK);
  CHECK(take(out) == "-1");
  CHECK(a5g_cyc_render("1 +", 120, &out) == A5G_ERR_SYNTAX);
  CHECK(std::string(a5g_last_error()).size() > 0);
  CHECK(a5g_cyc_render("z7", 120, &out) == A5G_ERR_ROOT_ORDER);
  CHECK(a5g_cyc_render("1/0", 120, &out) == A5G_ERR_DIVISION_BY_ZERO);
  REQUIRE(a5g_poly_render("(x1+x2)^2 - x1^2 - x2^2", 120, &out) == A5G_OK);
  CHECK(take(out) == "2*x1*x2");
  CHECK(a5g_cyc_render(nullptr, 120, &out) == A5G_ERR_INVALID_ARGUMENT);
}

TEST_CASE("runner lifecycle and errors") {
  a5g_runner* r = nullptr;
  CHECK(a5g_runner_new("does/not/exist.json", 0, &r) == A5G_ERR_CONFIG);
  CHECK(r == nullptr);
  REQUIRE(a5g_runner_new(nullptr, 0, &r) == A5G_OK);
  CHECK(a5g_runner_conductor(r) == 120);
  char* out = nullptr;
  int rc = -1;
  CHECK(a5g_run(r, "no.such.*", A5G_FORMAT_JSON, 1, 0, &out, &rc) == A5G_ERR_NOT_FOUND);
  REQUIRE(a5g_run(r, "lattice.detA", A5G_FORMAT_JSON, 1, 0, &out, &rc) == A5G_OK);
  CHECK(rc == 0);
  auto text = take(out);
  CHECK(text.find("\"status\": \"pass\"") != std::string::npos);
  REQUIRE(a5g_run(r, "lattice.*", A5G_FORMAT_MARKDOWN, 2, 0, &out, &rc) == A5G_OK);
  CHECK(take(out).find("# Verification report") == 0);
  REQUIRE(a5g_list(r, "group.*", &out) == A5G_OK);
  CHECK(take(out).find("group.std") != std::string::npos);
  CHECK(a5g_describe(r, "nope", &out) == A5G_ERR_NOT_FOUND);
  REQUIRE(a5g_describe(r, "group.std", &out) == A5G_OK);
  CHECK(take(out).find("group_census") != std::string::npos);
  REQUIRE(a5g_cremona(r, "A5-standard", "X1.S5", nullptr, &out) == A5G_OK);
  CHECK(take(out).find("solution_dim") != std::string::npos);
  CHECK(a5g_cremona(r, "A5-standard", "[1,0,0]", nullptr, &out) == A5G_ERR_INVALID_ARGUMENT);
  CHECK(a5g_run(nullptr, "", A5G_FORMAT_JSON, 1, 0, &out, &rc) == A5G_ERR_INVALID_ARGUMENT);
  a5g_runner_free(r);
  a5g_runner_free(nullptr);
  CHECK(std::string(a5g_status_name(A5G_ERR_CONFIG)) == "config");
}
