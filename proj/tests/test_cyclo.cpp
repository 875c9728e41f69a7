#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "a5geom/error.hpp"
#include "support.hpp"

using namespace t;

namespace {

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-10) { return std::abs(a - b) < tol; }

std::complex<double> root(int k, int e = 1) { return std::polar(1.0, 2 * M_PI * e / k); }

// Walk every string literal in the registry's constants, forms and points.
void collect(const ojson& j, std::vector<std::string>& out) {
  if (j.is_string()) out.push_back(j.get<std::string>());
  else if (j.is_array() || j.is_object())
    for (auto& v : j) collect(v, out);
}

}  // namespace

TEST_CASE("cyclotomic polynomials and field degree") {
  CHECK(cyclotomic_poly(1) == std::vector<mpz_class>{-1, 1});
  CHECK(cyclotomic_poly(5) == std::vector<mpz_class>{1, 1, 1, 1, 1});
  CHECK(cyclotomic_poly(6) == std::vector<mpz_class>{1, -1, 1});
  for (int n : {1, 2, 3, 4, 5, 6, 12, 20, 24, 60, 120})
    CHECK(Field::get(n)->degree() == euler_phi(n));
  CHECK(F120()->degree() == 32);
}

TEST_CASE("parse literals") {
  Cyc w = cyc("z5^3 + z5^2 + 2");
  CHECK(w == Cyc::zeta(F120(), 5, 3) + Cyc::zeta(F120(), 5, 2) + Cyc(2L));
  CHECK(close(w.embed(), root(5, 3) + root(5, 2) + 2.0));
  CHECK(cyc("0").is_zero());
  CHECK(cyc("z4*z4") == Cyc(-1L));
  CHECK(cyc("3/6") == Cyc(Rat(1, 2)));
  CHECK(cyc("(1+z4)^2") == cyc("2*z4"));
  CHECK(cyc("z4^-1") == cyc("-z4"));
}

TEST_CASE("parse errors") {
  auto code = [](const std::string& s, const Field* F) {
    try {
      parse_cyc(s, F);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::config;
  };
  CHECK(code("1 +", F120()) == Errc::syntax);
  CHECK(code("z7", F120()) == Errc::root_order);
  CHECK(code("z5", Field::get(4)) == Errc::root_order);
  CHECK(code("(1", F120()) == Errc::syntax);
  CHECK(code("1/0", F120()) == Errc::division_by_zero);
}

TEST_CASE("field arithmetic examples") {
  CHECK(cyc("z5 + z5^2 + z5^3 + z5^4") == Cyc(-1L));
  CHECK(cyc("(4 + 3*z4)*(4 - 3*z4)") == Cyc(25L));
  Cyc p = cyc("(z6 - 1)*(-z6)");
  // numeric embedding oracle
  auto z6 = root(6);
  CHECK(close(p.embed(), (z6 - 1.0) * (-z6)));
  CHECK(p == cyc("z6 - z6^2"));
  CHECK(p == Cyc(1L));  // z6^2 = z6 - 1
  CHECK_THROWS_AS(Cyc(1L) / Cyc(0L), Error);
  CHECK_THROWS_AS(Cyc(0L).inv(), Error);
}

TEST_CASE("complex embedding") {
  CHECK(close(Cyc(1L).in(F120()).embed(1), {1.0, 0.0}));
  CHECK(close(cyc("z4").embed(1), {0.0, 1.0}));
  CHECK(close(cyc("z4").embed(7), root(4, 7)));
  const Cyc& s6 = reg().consts.at("s6");
  CHECK(std::abs(std::abs(s6.embed().real()) - std::sqrt(6.0)) < 1e-10);
  CHECK(std::abs(s6.embed().imag()) < 1e-10);
}

TEST_CASE("square root of 6 from zeta8 and zeta12") {
  Cyc r2 = cyc("z8 + z8^7"), r3 = cyc("z12 + z12^11");
  CHECK(r2 * r2 == Cyc(2L));
  CHECK(r3 * r3 == Cyc(3L));
  Cyc s6 = r2 * r3;
  CHECK(s6 * s6 == Cyc(6L));
  CHECK(std::abs(s6.embed().real() - std::sqrt(6.0)) < 1e-10);
  // both registry branches square to 6 and are negatives of each other
  CHECK(reg(0).consts.at("s6") * reg(0).consts.at("s6") == Cyc(6L));
  CHECK(reg(1).consts.at("s6") == -reg(0).consts.at("s6"));
  Cyc r32 = reg().consts.at("r32");
  CHECK(r32 * r32 == Cyc(Rat(3, 2)));
}

TEST_CASE("exact square roots and roots of polynomials") {
  Cyc out;
  CHECK(cyc_sqrt(Cyc(6L), F120(), out));
  CHECK(out * out == Cyc(6L));
  CHECK(cyc_sqrt(cyc("-1"), F120(), out));
  CHECK(out * out == Cyc(-1L));
  CHECK_FALSE(cyc_sqrt(Cyc(7L), F120(), out));
  CHECK_FALSE(cyc_sqrt(parse_cyc("2", Field::get(5)), Field::get(5), out));
  // x^2 - x - 1 has roots -(z5^2 + z5^3) and -(z5 + z5^4)
  auto roots = field_roots({Cyc(-1L), Cyc(-1L), Cyc(1L)}, F120());
  REQUIRE(roots.size() == 2);
  for (auto& r : roots) CHECK(r * r - r - Cyc(1L) == Cyc(0L));
  bool complete = true;
  int distinct = 0;
  // x^3 - 2 has no root in an abelian field
  auto none = field_roots({Cyc(-2L), Cyc(0L), Cyc(0L), Cyc(1L)}, Field::get(12), &complete, &distinct);
  CHECK(none.empty());
  CHECK(distinct == 3);
}

TEST_CASE("render and parse round trip on registry literals") {
  std::vector<std::string> lits;
  auto doc = ojson::parse(builtin_registry());
  collect(doc.at("constants"), lits);
  collect(doc.at("points"), lits);
  REQUIRE(lits.size() > 50);
  for (auto& s : lits) {
    Cyc a = parse_cyc(s, F120(), &reg().consts);
    CHECK(parse_cyc(render(a), F120()) == a);
  }
  std::vector<std::string> forms;
  collect(doc.at("forms"), forms);
  for (auto& s : forms) {
    Poly p = parse_poly(s, F120(), &reg().env);
    CHECK(parse_poly(render(p), F120()) == p);
  }
}

TEST_CASE("galois action and conductor") {
  Cyc a = cyc("z5 + 2*z4");
  CHECK(a.galois(7) == cyc("z5^2 + 2*z4^3"));
  CHECK_THROWS_AS(a.galois(2), Error);
  CHECK(conductor_of(cyc("z5 + z5^4")) == 5);
  CHECK(conductor_of(reg().consts.at("s6")) == 24);
  CHECK(conductor_of(Cyc(3L).in(F120())) == 1);
}
