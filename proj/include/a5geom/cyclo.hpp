#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "a5geom/error.hpp"

namespace a5g {

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<mpz_class> cyclotomic_poly(int n);

long euler_phi(long n);

// Q(zeta_N) in the power basis 1, z, ..., z^(phi-1) modulo Phi_N.
// Instances are interned by Field::get and never freed.
class Field {
 public:
  static const Field* get(int N);

  int conductor() const { return N_; }
  int degree() const { return phi_; }
  const std::vector<mpz_class>& modulus() const { return phi_poly_; }

  // z^k reduced modulo Phi_N, as sparse (exponent, coefficient) pairs.
  const std::vector<std::pair<int, long>>& power(long k) const;

  // Generators of (Z/N)^* used for the norm tower: (k, r) where r is the
  // relative order of k modulo the subgroup generated by the earlier steps.
  const std::vector<std::pair<int, int>>& norm_steps() const { return steps_; }

  std::vector<int> units() const;

 private:
  explicit Field(int N);

  int N_;
  int phi_;
  std::vector<mpz_class> phi_poly_;
  std::vector<std::vector<std::pair<int, long>>> pow_;
  std::vector<std::pair<int, int>> steps_;
};

class Cyc {
 public:
  Cyc() = default;
  Cyc(long v);  // NOLINT
  Cyc(const mpz_class& v);  // NOLINT
  Cyc(const mpq_class& v);  // NOLINT

  // e^(2 pi i e / k) in F; k must divide the conductor.
  static Cyc zeta(const Field* F, long k, long e = 1);
  // Raw power basis element z^e of F (z = zeta_N).
  static Cyc z(const Field* F, long e);

  const Field* field() const { return F_; }
  Cyc in(const Field* F) const;

  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  bool is_rational() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
  mpq_class rational() const;
  mpq_class coeff(int e) const;
  std::size_t nterms() const { return t_.size(); }
  std::size_t bits() const;

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o);
  Cyc& operator/=(const Cyc& o);

  Cyc inv() const;
  Cyc pow(long e) const;
  Cyc galois(long k) const;
  Cyc conj() const { return galois(-1); }

  // Value at e^(2 pi i k / N); diagnostics only.
  std::complex<double> embed(long k = 1) const;

  int compare(const Cyc& o) const;
  std::size_t hash() const;
  std::string str() const;

  const std::vector<std::pair<int, mpz_class>>& terms() const { return t_; }
  const mpz_class& den() const { return d_; }

  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend Cyc operator/(Cyc a, const Cyc& b) { return a /= b; }
  friend bool operator==(const Cyc& a, const Cyc& b) { return a.compare(b) == 0; }
  friend bool operator!=(const Cyc& a, const Cyc& b) { return a.compare(b) != 0; }
  friend bool operator<(const Cyc& a, const Cyc& b) { return a.compare(b) < 0; }

 private:
  void normalize();
  static const Field* join(const Cyc& a, const Cyc& b);

  const Field* F_ = nullptr;
  std::vector<std::pair<int, mpz_class>> t_;
  mpz_class d_ = 1;
};

// Named constants usable inside literals.
using CycEnv = std::map<std::string, Cyc>;

Cyc parse_cyc(const std::string& text, const Field* F, const CycEnv* env = nullptr);
std::string render(const Cyc& a);

// Exact square root of a inside F, if one exists.
bool cyc_sqrt(const Cyc& a, const Field* F, Cyc& out);

// Distinct roots in F of the univariate polynomial with coefficients f
// (lowest degree first).  Candidates come from a floating-point search over
// the complex embeddings and are accepted only after exact verification.
// When the search cannot rule out further roots, *complete is set false.
// *distinct receives the number of distinct roots over the algebraic closure.
std::vector<Cyc> field_roots(const std::vector<Cyc>& f, const Field* F, bool* complete = nullptr,
                             int* distinct = nullptr);

// Univariate gcd, coefficients lowest degree first; not normalized.
std::vector<Cyc> upoly_gcd(const std::vector<Cyc>& a, const std::vector<Cyc>& b);

// Smallest conductor m dividing N with a in Q(zeta_m).
int conductor_of(const Cyc& a);

struct CycHash {
  std::size_t operator()(const Cyc& a) const { return a.hash(); }
};

}  // namespace a5g
