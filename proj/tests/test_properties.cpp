#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "a5geom/cremona.hpp"
#include "a5geom/projvar.hpp"
#include "support.hpp"

using namespace t;

namespace {

constexpr int kTrials = 1000;

// Runs `trial` kTrials times with its own seed; returns the failure count.
template <class Fn>
int trials(std::uint64_t seed, Fn trial) {
  Gen g(seed);
  int bad = 0;
  for (int n = 0; n < kTrials; ++n) bad += !trial(g);
  return bad;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-6 * (1 + std::abs(a)); }

const Group& random_a5(Gen& g) { return group(g.integer(0, 1) ? "A5-standard" : "A5-nonstandard"); }

Poly small_form(Gen& g, int degree, int terms) {
  auto mons = monomials_of_degree(degree);
  Poly p;
  for (int i = 0; i < terms; ++i) p += Poly::monomial(mons[g.integer(0, static_cast<long>(mons.size()) - 1)], g.small_int());
  return p;
}

Mat small_matrix(Gen& g) {
  Mat m(kVars, kVars);
  for (int i = 0; i < kVars; ++i)
    for (int j = 0; j < kVars; ++j) m(i, j) = Cyc(g.integer(-2, 2));
  return m;
}

Vec scaled(const Vec& v, const Cyc& c) {
  Vec out;
  for (auto& x : v) out.push_back(x * c);
  return out;
}

}  // namespace

TEST_CASE("field axioms") {
  CHECK(trials(1, [](Gen& g) {
          Cyc a = g.element(), b = g.element(), c = g.element();
          bool ok = (a + b) + c == a + (b + c) && a * b == b * a && (a * b) * c == a * (b * c) &&
                    a * (b + c) == a * b + a * c && a + Cyc(0L) == a && a * Cyc(1L) == a && (a - a).is_zero();
          if (!a.is_zero()) ok = ok && (a * a.inv()).is_one() && (b / a) * a == b;
          return ok;
        }) == 0);
}

TEST_CASE("subfields are closed") {
  const int subs[] = {1, 3, 4, 5, 8, 12, 15, 20, 24, 40, 60};
  CHECK(trials(2, [&](Gen& g) {
          int m = subs[g.integer(0, 10)];
          auto sub = [&] {
            Cyc a = Cyc(0L).in(F120());
            for (int i = 0; i < 3; ++i) a += Cyc(g.rational()) * Cyc::zeta(F120(), m, g.integer(0, m - 1));
            return a;
          };
          Cyc a = sub(), b = sub();
          Cyc c = a * b + a;
          if (!b.is_zero()) c += a / b;
          return m % conductor_of(c) == 0;
        }) == 0);
}

TEST_CASE("complex embedding is a ring homomorphism") {
  CHECK(trials(3, [](Gen& g) {
          Cyc a = g.element(), b = g.element();
          long k = F120()->units()[g.integer(0, 31)];
          return close((a * b).embed(k), a.embed(k) * b.embed(k)) && close((a + b).embed(k), a.embed(k) + b.embed(k)) &&
                 close(a.galois(k).embed(1), a.embed(k));
        }) == 0);
}

TEST_CASE("Euler identity") {
  CHECK(trials(4, [](Gen& g) {
          int d = static_cast<int>(g.integer(1, 4));
          Poly f = g.form(d, 4);
          Poly e;
          for (int i = 0; i < kVars; ++i) e += Poly::var(i) * f.diff(i);
          return e == f * Cyc(static_cast<long>(d));
        }) == 0);
}

TEST_CASE("evaluation is homogeneous") {
  CHECK(trials(5, [](Gen& g) {
          int d = static_cast<int>(g.integer(1, 4));
          Poly f = g.form(d, 4);
          Vec p = g.point();
          Cyc l = g.nonzero();
          return f.eval(scaled(p, l)) == l.pow(d) * f.eval(p);
        }) == 0);
}

TEST_CASE("orbit-stabilizer") {
  CHECK(trials(6, [](Gen& g) {
          const Group& G = random_a5(g);
          Vec p;
          if (g.integer(0, 1)) {
            p = g.point(true);
          } else {
            // points on fixed subspaces have larger stabilizers
            int e = static_cast<int>(g.integer(1, G.order() - 1));
            auto fl = fixed_locus(G, {e});
            auto& s = fl[g.integer(0, static_cast<long>(fl.size()) - 1)];
            p = Vec(kVars, Cyc(0L));
            for (auto& b : s.basis) {
              Cyc c = g.small_int();
              for (int i = 0; i < kVars; ++i) p[i] += b[i] * c;
            }
            bool zero = true;
            for (auto& x : p) zero = zero && x.is_zero();
            if (zero) p = s.basis[0];
          }
          auto orb = orbit_of(p, G);
          return static_cast<int>(orb.length() * stabilizer(p, G).size()) == G.order();
        }) == 0);
}

TEST_CASE("substitution is functorial") {
  CHECK(trials(7, [](Gen& g) {
          Poly f = small_form(g, static_cast<int>(g.integer(1, 3)), 4);
          Mat A = small_matrix(g), B = small_matrix(g);
          if (!(f.compose_linear(A).compose_linear(B) == f.compose_linear(A * B))) return false;
          // substitution commutes with evaluation
          std::array<Poly, kVars> im;
          for (int i = 0; i < kVars; ++i) im[i] = small_form(g, 2, 2);
          for (auto& x : im)
            if (x.is_zero()) x = Poly::var(0) * Poly::var(1);
          Vec p = g.point(true);
          Vec q;
          for (auto& x : im) q.push_back(x.eval(p));
          return f.substitute(im).eval(p) == f.eval(q);
        }) == 0);
}

TEST_CASE("pairings are symmetric and multilinear") {
  auto k3 = k3_context(6, {{"C", 12, 8}, {"F", 16, -2}}, {{{"C", "F"}, 3}});
  auto bl = blowup_context(2, {{8, 0, -24}, {10, 6, -30}});
  CHECK(trials(8, [&](Gen& g) {
          auto div = [&](const ContextPtr& ctx) {
            DivisorClass d{ctx, {}};
            for (int i = 0; i < ctx->rank(); ++i) d.c.push_back(g.rational());
            return d;
          };
          auto a = div(k3), b = div(k3), c = div(k3);
          Rat s = g.rational();
          bool ok = pair(a, b) == pair(b, a) && pair(a + b * s, c) == pair(a, c) + s * pair(b, c);
          auto x = div(bl), y = div(bl), z = div(bl), w = div(bl);
          ok = ok && triple(x, y, z) == triple(z, x, y) && triple(x, y, z) == triple(y, x, z) &&
               triple(x + w * s, y, z) == triple(x, y, z) + s * triple(w, y, z);
          return ok;
        }) == 0);
}

TEST_CASE("curve containment agrees with evaluation") {
  CHECK(trials(9, [](Gen& g) {
          Vec u = g.point(true), v = g.point(true);
          auto C = line_through(u, v);
          int d = static_cast<int>(g.integer(1, 3));
          auto nonzero = [&](int deg, int terms) {
            for (;;) {
              Poly p = small_form(g, deg, terms);
              if (!p.is_zero()) return p;
            }
          };
          Poly f = nonzero(d, 4);
          if (g.integer(0, 1)) {
            // force containment: multiples of a linear form through u and v
            Mat m = Mat::from_rows({u, v});
            auto ker = nullspace(m);
            Poly L;
            const Vec& row = ker[g.integer(0, static_cast<long>(ker.size()) - 1)];
            for (int i = 0; i < kVars; ++i) L += Poly::var(i) * row[i];
            f = d > 1 ? L * nonzero(d - 1, 3) : L;
          }
          // oracle: a degree-d form vanishes on a line iff it vanishes at d+1 distinct points of it
          bool on = true;
          for (long s = 0; s <= d; ++s) on = on && f.eval(C.at(Cyc(s), Cyc(1L))).is_zero();
          return contains_curve({f}, C) == on;
        }) == 0);
}

TEST_CASE("singularity type is invariant under the group") {
  const Poly& Y1 = reg().forms.at("Y1");
  const Poly& Y2 = reg().forms.at("Y2");
  auto s1 = orbit_of(std::vector<Cyc>{Cyc(1L), Cyc(0L), Cyc(0L), Cyc(0L), Cyc(0L)}, group("A5-standard"));
  auto s2 = orbit_of(reg().points.at("Y2.S5"), group("A5-nonstandard"));
  auto& smooth = reg().points.at("Y2.S12");
  CHECK(trials(10, [&](Gen& g) {
          bool ns = g.integer(0, 1);
          const Group& G = group(ns ? "A5-nonstandard" : "A5-standard");
          int e = static_cast<int>(g.integer(0, G.order() - 1));
          if (ns) {
            const Vec& p = s2.points[g.integer(0, 4)];
            bool ok = classify_singularity(Y2, G.act(e, p)).type == SingType::A2;
            return ok && !is_singular_at({Y2}, G.act(e, smooth));
          }
          const Vec& p = s1.points[g.integer(0, 4)];
          return classify_singularity(Y1, G.act(e, p)).type == SingType::A1;
        }) == 0);
}

TEST_CASE("invariant forms are fixed by every element") {
  std::map<std::string, std::vector<Poly>> inv;
  for (auto name : {"A5-standard", "A5-nonstandard"})
    for (int d : {2, 3}) {
      auto fs = invariant_forms(group(name), d);
      inv[std::string(name) + std::to_string(d)] = fs;
    }
  CHECK(trials(11, [&](Gen& g) {
          bool ns = g.integer(0, 1);
          std::string name = ns ? "A5-nonstandard" : "A5-standard";
          int d = static_cast<int>(g.integer(2, 3));
          auto& fs = inv.at(name + std::to_string(d));
          Poly F;
          for (auto& f : fs) F += f * g.small_int();
          if (F.is_zero()) return true;
          const Group& G = group(name);
          int e = static_cast<int>(g.integer(0, G.order() - 1));
          return proportional(F.compose_linear(G.lift(e)), F);
        }) == 0);
}
