#include "a5geom/cremona.hpp"

#include <map>

namespace a5g {

namespace {

Poly monomial_prod_except(int i) {
  Exps e{1, 1, 1, 1, 1};
  e[i] = 0;
  return Poly::monomial(e);
}

std::array<Poly, kVars> sigma() {
  std::array<Poly, kVars> s;
  for (int i = 0; i < kVars; ++i) s[i] = monomial_prod_except(i);
  return s;
}

Mat gram(const Poly& X) {
  Mat B(kVars, kVars);
  for (int i = 0; i < kVars; ++i)
    for (int j = 0; j < kVars; ++j) {
      Exps e{};
      e[i] += 1;
      e[j] += 1;
      Cyc c = X.coeff(e);
      B(i, j) = i == j ? c : c * Cyc(mpq_class(1, 2));
    }
  return B;
}

}  // namespace

bool proportional(const Poly& a, const Poly& b, Cyc* c) {
  if (a.is_zero() || b.is_zero()) return false;
  if (a.leading_key() != b.leading_key()) return false;
  Cyc r = a.leading_coeff() / b.leading_coeff();
  if (a != b * r) return false;
  if (c) *c = r;
  return true;
}

CremonaMap build_cremona(const std::vector<Vec>& points) {
  if (points.size() != kVars) throw Error(Errc::invalid_argument, "Cremona map needs exactly 5 points");
  CremonaMap chi;
  chi.P = Mat(kVars, kVars);
  for (int j = 0; j < kVars; ++j) {
    Vec p = normalize_point(points[j]);
    for (int i = 0; i < kVars; ++i) chi.P(i, j) = p[i];
  }
  if (det(chi.P).is_zero()) throw Error(Errc::degenerate, "points lie on a hyperplane");
  Mat Mi = inverse(chi.P);
  for (int i = 0; i < kVars; ++i) {
    int k = 0;
    while (Mi(i, k).is_zero()) ++k;
    Cyc s = Mi(i, k).inv();
    for (int j = 0; j < kVars; ++j) Mi(i, j) = Mi(i, j) * s;
  }
  chi.M = Mi;
  chi.Minv = inverse(Mi);
  std::array<Poly, kVars> lin;
  for (int i = 0; i < kVars; ++i)
    for (int j = 0; j < kVars; ++j)
      if (!chi.M(i, j).is_zero()) lin[i] += Poly::var(j) * chi.M(i, j);
  for (int i = 0; i < kVars; ++i) {
    Poly f(Cyc(1L));
    for (int j = 0; j < kVars; ++j)
      if (j != i) f = f * lin[j];
    chi.forms[i] = f;
  }
  return chi;
}

Poly adapted_form(const CremonaMap& chi, const Poly& X) { return X.compose_linear(chi.Minv); }

CremonaImage image_cubic(const CremonaMap& chi, const Poly& X) {
  if (X.homogeneous_degree() != 2) throw Error(Errc::invalid_argument, "image_cubic expects a quadric");
  Poly Xt = adapted_form(chi, X);
  for (int i = 0; i < kVars; ++i)
    if (!Xt.coeff([&] {
          Exps e{};
          e[i] = 2;
          return e;
        }()).is_zero())
      throw Error(Errc::not_on_variety, "the points do not lie on the quadric");
  auto mons = monomials_of_degree(3);
  std::vector<Poly> rem;
  std::map<MonoKey, int> row_of;
  for (auto& m : mons) {
    Exps e;
    for (int i = 0; i < kVars; ++i) e[i] = 3 - m[i];
    Poly r = reduce_by(Poly::monomial(e), Xt);
    for (auto& [k, c] : r.terms()) row_of.emplace(k, static_cast<int>(row_of.size()));
    rem.push_back(r);
  }
  CremonaImage out;
  Mat A(static_cast<int>(row_of.size()), static_cast<int>(mons.size()));
  for (std::size_t j = 0; j < mons.size(); ++j)
    for (auto& [k, c] : rem[j].terms()) A(row_of[k], static_cast<int>(j)) = c;
  auto ker = row_of.empty() ? std::vector<Vec>{} : nullspace(A);
  out.solution_dim = static_cast<int>(ker.size());
  if (out.solution_dim != 1) throw Error(Errc::no_solution, "image cubic is not unique (solution dimension " +
                                                            std::to_string(out.solution_dim) + ")");
  Poly Y;
  for (std::size_t j = 0; j < mons.size(); ++j)
    if (!ker[0][j].is_zero()) Y += Poly::monomial(mons[j], ker[0][j]);
  Y = Y * Y.leading_coeff().inv();
  if (!reduce_by(Y.substitute(sigma()), Xt).is_zero()) throw Error(Errc::degenerate, "image cubic check failed");
  out.target = Y;
  Mat K = inverse(chi.M).transpose() * gram(X);
  Poly S = Y.compose_linear(K);
  out.source = S * S.leading_coeff().inv();
  return out;
}

Equivariance conjugated_group(const CremonaMap& chi, const Group& G, const Poly& Y) {
  Equivariance eq;
  eq.ok = true;
  for (auto& g : G.gen_matrices()) {
    Mat D = chi.M * g * chi.Minv;
    Mat T(kVars, kVars);
    for (int i = 0; i < kVars; ++i) {
      int nz = 0, col = -1;
      for (int j = 0; j < kVars; ++j)
        if (!D(i, j).is_zero()) {
          ++nz;
          col = j;
        }
      if (nz != 1) throw Error(Errc::degenerate, "conjugated generator is not monomial; the points are not an orbit");
      T(i, col) = D(i, col).inv();
    }
    Cyc c;
    bool inv = proportional(Y.compose_linear(T), Y, &c);
    eq.ok = eq.ok && inv;
    eq.target_action.push_back(T);
    eq.scalars.push_back(inv ? c : Cyc());
  }
  return eq;
}

bool involution_identity() {
  auto s = sigma();
  auto ss = s;
  for (int i = 0; i < kVars; ++i) ss[i] = s[i].substitute(s);
  Poly prod = Poly::monomial({1, 1, 1, 1, 1});
  for (int i = 0; i < kVars; ++i)
    if (ss[i] != prod.pow(3) * Poly::var(i)) return false;
  return true;
}

bool roundtrip_ok(const CremonaMap& chi, const Poly& X, const Poly& Y) {
  Poly lhs = Y.substitute(sigma());
  Poly rhs = Poly::monomial({2, 2, 2, 2, 2}) * adapted_form(chi, X);
  return proportional(lhs, rhs);
}

}  // namespace a5g
