#pragma once

#include <random>
#include <string>
#include <vector>

#include "a5geom/group.hpp"
#include "a5geom/lattice.hpp"
#include "a5geom/poly.hpp"
#include "a5geom/runner.hpp"
#include "verify/registry.hpp"

namespace t {

using namespace a5g;

inline const Field* F120() { return Field::get(120); }

inline Cyc cyc(const std::string& s) { return parse_cyc(s, F120()); }
inline Poly poly(const std::string& s) { return parse_poly(s, F120()); }

// Built-in registry, first constant branch.
inline const Registry& reg(int branch = 0) {
  static const Registry r0 = load_registry(ojson::parse(builtin_registry()), 0, 0);
  static const Registry r1 = load_registry(ojson::parse(builtin_registry()), 0, 1);
  return branch ? r1 : r0;
}

inline const Group& group(const std::string& name) {
  static std::map<std::string, Group> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, enumerate_group(reg().groups.at(name))).first;
  return it->second;
}

// Seeded generators for the randomized suites.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  Rat rational(long bound = 9) {
    Rat r(integer(-bound, bound), integer(1, bound));
    r.canonicalize();
    return r;
  }

  // A few random powers of zeta_N with small rational coefficients.
  Cyc element(const Field* F = F120(), int terms = 3) {
    Cyc a = Cyc(0L).in(F);
    for (int i = 0; i < terms; ++i) a += Cyc(rational()) * Cyc::z(F, integer(0, F->conductor() - 1));
    return a;
  }

  Cyc nonzero(const Field* F = F120()) {
    for (;;) {
      Cyc a = element(F);
      if (!a.is_zero()) return a;
    }
  }

  Cyc small_int() { return Cyc(integer(-5, 5)); }

  Poly form(int degree, int terms = 6) {
    auto mons = monomials_of_degree(degree);
    Poly p;
    for (int i = 0; i < terms; ++i) p += Poly::monomial(mons[integer(0, static_cast<long>(mons.size()) - 1)], element(F120(), 1));
    return p;
  }

  Vec point(bool small = false) {
    for (;;) {
      Vec v;
      for (int i = 0; i < kVars; ++i) v.push_back(small ? small_int() : element(F120(), 2));
      for (auto& c : v)
        if (!c.is_zero()) return v;
    }
  }

  Mat matrix(bool small = true) {
    for (;;) {
      Mat m(kVars, kVars);
      for (int i = 0; i < kVars; ++i)
        for (int j = 0; j < kVars; ++j) m(i, j) = small ? small_int() : element(F120(), 1);
      if (!det(m).is_zero()) return m;
    }
  }
};

}  // namespace t
