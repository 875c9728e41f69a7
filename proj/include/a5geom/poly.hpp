#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "a5geom/cyclo.hpp"
#include "a5geom/linalg.hpp"

namespace a5g {

constexpr int kVars = 5;
using Exps = std::array<int, kVars>;

// Packed exponent vector; integer order on keys is graded lexicographic.
using MonoKey = std::uint64_t;
MonoKey pack(const Exps& e);
Exps unpack(MonoKey k);
int key_degree(MonoKey k);

// Polynomial in x1..x5 over a cyclotomic field.
class Poly {
 public:
  using TermMap = std::map<MonoKey, Cyc>;

  Poly() = default;
  Poly(const Cyc& c);  // NOLINT
  static Poly var(int i);
  static Poly monomial(const Exps& e, const Cyc& c = Cyc(1L));

  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t nterms() const { return t_.size(); }
  int degree() const;
  // Common total degree of all terms, or -1.
  int homogeneous_degree() const;
  Cyc coeff(const Exps& e) const;
  MonoKey leading_key() const;
  const Cyc& leading_coeff() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator*(const Poly& o) const;
  Poly operator*(const Cyc& c) const;
  Poly pow(int e) const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly diff(int i) const;
  Cyc eval(const Vec& pt) const;
  // p(images[0], ..., images[4]); images must share one degree.
  Poly substitute(const std::array<Poly, kVars>& images) const;
  // p(A x), i.e. x_i -> sum_j A(i, j) x_j.
  Poly compose_linear(const Mat& A) const;
  Poly galois(long k) const;

  std::string str() const;

 private:
  void add_term(MonoKey k, const Cyc& c);
  TermMap t_;
};

// Named forms (or constants) usable inside literals.
using PolyEnv = std::map<std::string, Poly>;

Poly parse_poly(const std::string& text, const Field* F, const PolyEnv* env = nullptr);
std::string render(const Poly& p);

// Remainder of p after repeated division by the leading term of d.
Poly reduce_by(const Poly& p, const Poly& d);

// All exponent vectors of total degree d, in decreasing graded-lex order.
std::vector<Exps> monomials_of_degree(int d);

// Ring-generic evaluation of a polynomial at values in R.
template <class R, class Scale>
R eval_generic(const Poly& p, const std::array<R, kVars>& x, const R& zero, const R& one, Scale scale) {
  int maxd = 0;
  for (auto& [k, c] : p.terms()) {
    Exps e = unpack(k);
    for (int v : e) maxd = std::max(maxd, v);
  }
  std::array<std::vector<R>, kVars> pw;
  for (int i = 0; i < kVars; ++i) {
    pw[i].push_back(one);
    for (int j = 1; j <= maxd; ++j) pw[i].push_back(pw[i].back() * x[i]);
  }
  R acc = zero;
  for (auto& [k, c] : p.terms()) {
    Exps e = unpack(k);
    R m = one;
    bool first = true;
    for (int i = 0; i < kVars; ++i) {
      if (e[i] == 0) continue;
      if (first) {
        m = pw[i][e[i]];
        first = false;
      } else {
        m = m * pw[i][e[i]];
      }
    }
    acc = acc + scale(c, m);
  }
  return acc;
}

}  // namespace a5g
