#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "a5geom/projvar.hpp"
#include "support.hpp"

using namespace t;

namespace {

const Poly& F(const std::string& n) { return reg().forms.at(n); }

Vec e(int i) {
  Vec v(kVars, Cyc(0L));
  v[i] = Cyc(1L);
  return v;
}

std::vector<Vec> rows(const std::string& curve) {
  std::vector<Vec> out;
  for (auto& f : reg().curves.at(curve).at("forms")) out.push_back(linear_row(reg().form_expr(f.get<std::string>())));
  return out;
}

RationalCurve line(const std::string& name) { return line_from_forms(rows(name)); }

RationalCurve rnc(const std::string& orbit) {
  auto orb = orbit_of(reg().points.at(orbit), group("A5-nonstandard"));
  std::vector<Vec> pts(orb.points.begin(), orb.points.begin() + 7);
  return rnc_through(pts);
}

}  // namespace

TEST_CASE("singular points") {
  CHECK(is_singular_at({F("Y1")}, e(0)));
  for (auto& p : orbit_of(reg().points.at("X1.S12"), group("A5-standard")).points) CHECK_FALSE(is_singular_at({F("X1")}, p));
  CHECK(is_singular_at({F("Y2")}, reg().points.at("Y2.S5")));
  CHECK_FALSE(is_singular_at({F("X2")}, reg().points.at("Y2.S5")));
  CHECK_THROWS_AS(is_singular_at({F("X1")}, e(0)), Error);
}

TEST_CASE("singularity types") {
  CHECK(classify_singularity(F("Y1"), e(0)).type == SingType::A1);
  CHECK(classify_singularity(F("Y2"), reg().points.at("Y2.S5")).type == SingType::A2);
  CHECK(classify_singularity(F("vertex_cone"), reg().points.at("vertex")).type == SingType::A1);
  auto r = classify_singularity(F("Y1"), e(2));
  CHECK(r.corank == 0);
  try {
    classify_singularity(F("X1"), reg().points.at("X1.S12"));
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == Errc::smooth_point);
  }
  // a cusp in the plane x3 = x4 = x5 = 0 direction: x2^2 x5 - x1^3 at [0:0:0:0:1] is not A1
  CHECK(classify_singularity(poly("x2^2*x5 - x1^3 + x3*x4*x5"), e(4)).type == SingType::A2);
  CHECK(classify_singularity(poly("x1^3 + x2^3 + x3^3 + x4^3"), e(4)).type == SingType::other);
}

TEST_CASE("singularities of a surface section") {
  // the quadric section of Y2 has nodes at the length-5 orbit
  for (auto& p : orbit_of(reg().points.at("Y2.S5"), group("A5-nonstandard")).points) {
    REQUIRE(F("X2").eval(p).is_zero());
    CHECK(classify_surface_point(F("Y2"), F("X2"), p).type == SingType::A1);
  }
  CHECK(sing_name(SingType::A1) == std::string("A1"));
  CHECK(sing_name(SingType::A2) == std::string("A2"));
}

TEST_CASE("curve containment") {
  RationalCurve c1 = conic_in_plane(rows("X1.C1"), F("X1"));
  CHECK(c1.degree() == 2);
  CHECK(contains_curve({F("S2_25"), F("X1")}, c1));
  CHECK_FALSE(contains_curve({reg().form_expr("f3"), F("X1")}, c1));
  CHECK(contains_curve({F("X2")}, line("X2.L12")));
  Gen g(5);
  for (int n = 0; n < 10; ++n) CHECK_FALSE(contains_curve({F("X1")}, line_through(g.point(true), g.point(true))));
  RationalCurve C4 = rnc("X2.S12");
  CHECK(C4.degree() == 4);
  CHECK(contains_curve({F("R"), F("X2")}, C4));
  for (auto& p : orbit_of(reg().points.at("X2.S12"), group("A5-nonstandard")).points) CHECK(curve_contains_point(C4, p));
  CHECK_FALSE(curve_contains_point(C4, reg().points.at("X2.S5")));
}

TEST_CASE("singular along a curve") {
  RationalCurve C4 = rnc("X2.S12"), C4p = rnc("X2.S12p");
  CHECK(singular_along(F("R"), F("X2"), C4));
  CHECK(singular_along(F("Rp"), F("X2"), C4p));
  CHECK_FALSE(singular_along(F("Y2"), F("X2"), C4));
  // independent sampling: the 2x2 minors of the Jacobian of (Y2, X2) do not all vanish at 20 points
  int full = 0;
  for (long s = 1; s <= 20; ++s) {
    Vec p = C4.at(Cyc(s), Cyc(1L));
    Mat J(2, kVars);
    for (int i = 0; i < kVars; ++i) {
      J(0, i) = F("Y2").diff(i).eval(p);
      J(1, i) = F("X2").diff(i).eval(p);
    }
    full += rank(J) == 2;
  }
  CHECK(full > 0);
}

TEST_CASE("disjoint lines") {
  auto L12 = curve_orbit(line("X2.L12"), group("A5-nonstandard"));
  CHECK(L12.size() == 12);
  CHECK(lines_pairwise_disjoint(L12));
  auto L10p = curve_orbit(line("Y2.L10p"), group("A5-nonstandard"));
  CHECK(L10p.size() == 10);
  CHECK_FALSE(lines_pairwise_disjoint(L10p));
  auto l = line("Y2.L6");
  CHECK_FALSE(lines_pairwise_disjoint({l, l}));
  auto a = line_through(e(0), e(1)), b = line_through(e(1), e(2));
  auto m = line_intersection(a, b);
  REQUIRE(m.has_value());
  CHECK(normalize_point(*m) == e(1));
  CHECK_FALSE(line_intersection(a, line_through(e(2), e(3))).has_value());
}

TEST_CASE("linear systems") {
  CHECK(linear_system_dim({1, {}, {}}) == 5);
  CHECK(linear_system_dim({2, {}, {}}) == 15);
  CHECK(linear_system_dim({3, {}, {}}, &F("Y2")) == 34);
  CHECK(linear_system_dim({1, {e(0), e(1)}, {}}) == 3);
  auto& N = group("A5-nonstandard");
  LinearSystemSpec spec{3, {}, {}};
  for (auto n : {"Y2.S15", "Y2.S20"})
    for (auto& p : orbit_of(reg().points.at(n), N).points) spec.points.push_back(p);
  CHECK(linear_system_dim(spec, &F("Y2")) == 5);
  auto basis = linear_system_basis({1, {}, {line_through(e(0), e(1))}});
  CHECK(basis.size() == 3);
  for (auto& b : basis) {
    CHECK(b.eval(e(0)).is_zero());
    CHECK(b.eval(e(1)).is_zero());
  }
}

TEST_CASE("base curves") {
  RationalCurve c1 = conic_in_plane(rows("X1.C1"), F("X1"));
  auto r = base_curve_free({1, {}, {c1}}, nullptr, {c1});
  CHECK_FALSE(r.free);
  CHECK(r.dim == 2);
  auto l6 = line("Y2.L6");
  auto& N = group("A5-nonstandard");
  LinearSystemSpec spec{3, {}, curve_orbit(l6, N)};
  std::vector<RationalCurve> probes{line("Y2.L6p"), line("Y2.L10"), line("Y2.L10p")};
  auto ok = base_curve_free(spec, &F("Y2"), probes);
  CHECK(ok.free);
  CHECK(ok.witnesses.size() == 3);
}

TEST_CASE("pencil parameters from rank drop") {
  auto p = pencil_condition(reg().form_expr("f3"), reg().form_expr("g"), F("X1"), reg().points.at("X1.S5"));
  REQUIRE(p.singular_member);
  CHECK_FALSE(p.every_member);
  bool plus = same_parameter(p.a1, p.a2, cyc("4+3*z4"), Cyc(50L));
  bool minus = same_parameter(p.a1, p.a2, cyc("4-3*z4"), Cyc(50L));
  CHECK(plus != minus);
  auto q = pencil_condition(F("f1"), F("f2"), F("X2"), reg().points.at("X2.S5"));
  REQUIRE(q.singular_member);
  bool m1 = same_parameter(q.a1, q.a2, cyc("-3*z6+8"), Cyc(7L)), m2 = same_parameter(q.a1, q.a2, cyc("3*z6+5"), Cyc(7L));
  CHECK(m1 != m2);
  CHECK(same_parameter(Cyc(2L), Cyc(4L), Cyc(1L), Cyc(2L)));
  CHECK_FALSE(same_parameter(Cyc(1L), Cyc(0L), Cyc(0L), Cyc(1L)));
}

TEST_CASE("singular points inside a span") {
  // Y1 on the plane x4 = x5 = 0 is x1 x2 x3 = 0, singular at the three coordinate points
  auto s = singular_points_in_span(F("Y1"), {e(0), e(1), e(2)});
  CHECK(s.complete);
  CHECK(s.points.size() == 3);
  auto l = singular_points_in_span(F("X1"), {e(0), e(1)});
  CHECK(l.complete);
  CHECK(l.points.empty());
  // a smooth conic in a plane has no singular point
  auto c = singular_points_in_span(F("X1"), {e(0), e(1), e(2)});
  CHECK(c.complete);
  CHECK(c.points.empty());
}

TEST_CASE("ideal membership in a degree") {
  CHECK(in_ideal_degree({F("X2")}, F("X2") * poly("x1 + 2*x3")));
  CHECK_FALSE(in_ideal_degree({F("X2")}, F("f1")));
  CHECK(in_ideal_degree({F("f1"), F("f2")}, F("Y2")));
}
