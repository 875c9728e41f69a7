#include "a5geom/projvar.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace a5g {

namespace {

struct BF {
  BinForm c;
  BF operator+(const BF& o) const { return {bin_add(c, o.c)}; }
  BF operator*(const BF& o) const { return {bin_mul(c, o.c)}; }
};

const Field* field_of(const Vec& v) {
  for (auto& c : v)
    if (c.field()) return c.field();
  return Field::get(1);
}

Vec grad(const Poly& F, const Vec& p) {
  Vec g(kVars);
  for (int i = 0; i < kVars; ++i) g[i] = F.diff(i).eval(p);
  return g;
}

bool all_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Cyc& c) { return c.is_zero(); });
}

int chart_index(const Vec& p) {
  for (int i = 0; i < kVars; ++i)
    if (!p[i].is_zero()) return i;
  throw Error(Errc::invalid_argument, "zero vector is not a point");
}

Cyc polar(const Poly& Q, const Vec& u, const Vec& v) {
  auto r = restrict_to_line(Q, u, v);
  return r[1] * Cyc(mpq_class(1, 2));
}

Vec combo(const Cyc& a, const Vec& u, const Cyc& b, const Vec& v) {
  Vec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = a * u[i] + b * v[i];
  return r;
}

}  // namespace

bool is_zero_form(const BinForm& f) {
  return std::all_of(f.begin(), f.end(), [](const Cyc& c) { return c.is_zero(); });
}

BinForm bin_add(const BinForm& a, const BinForm& b) {
  BinForm r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

BinForm bin_mul(const BinForm& a, const BinForm& b) {
  if (a.empty() || b.empty()) return {};
  BinForm r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero())
      for (std::size_t j = 0; j < b.size(); ++j)
        if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  return r;
}

Cyc bin_eval(const BinForm& f, const Cyc& s, const Cyc& t) {
  int e = static_cast<int>(f.size()) - 1;
  Cyc v;
  for (int i = 0; i <= e; ++i)
    if (!f[i].is_zero()) v += f[i] * s.pow(e - i) * t.pow(i);
  return v;
}

Vec RationalCurve::at(const Cyc& s, const Cyc& t) const {
  Vec p(kVars);
  for (int i = 0; i < kVars; ++i) p[i] = bin_eval(x[i], s, t);
  return p;
}

std::vector<Vec> RationalCurve::coefficient_vectors() const {
  std::vector<Vec> out(degree() + 1, Vec(kVars));
  for (int i = 0; i < kVars; ++i)
    for (int k = 0; k <= degree(); ++k) out[k][i] = x[i][k];
  return out;
}

RationalCurve line_through(const Vec& p, const Vec& q) {
  if (rank(Mat::from_rows({p, q})) != 2) throw Error(Errc::degenerate, "line through coincident points");
  RationalCurve C;
  for (int i = 0; i < kVars; ++i) C.x[i] = {p[i], q[i]};
  return C;
}

RationalCurve line_from_forms(const std::vector<Vec>& forms) {
  auto ns = nullspace(Mat::from_rows(forms));
  if (ns.size() != 2) throw Error(Errc::degenerate, "linear forms do not cut out a line");
  return line_through(ns[0], ns[1]);
}

RationalCurve conic_in_plane(const std::vector<Vec>& forms, const Poly& Q) {
  if (Q.homogeneous_degree() != 2) throw Error(Errc::invalid_argument, "conic needs a quadric");
  auto b = nullspace(Mat::from_rows(forms));
  if (b.size() != 3) throw Error(Errc::degenerate, "linear forms do not cut out a plane");
  Mat gram(3, 3);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) gram(k, l) = polar(Q, b[k], b[l]);
  if (det(gram).is_zero()) throw Error(Errc::degenerate, "plane section is not a smooth conic");
  const Field* F = field_of(b[0]);
  Cyc one(1L), m1(-1L);
  std::vector<std::pair<Vec, Vec>> probes = {
      {b[0], b[1]}, {b[0], b[2]}, {b[1], b[2]},
      {combo(one, b[0], one, b[1]), b[2]}, {combo(one, b[0], one, b[2]), b[1]}, {combo(one, b[1], one, b[2]), b[0]},
      {combo(one, b[0], m1, b[1]), b[2]}, {combo(one, b[0], m1, b[2]), b[1]}, {combo(one, b[1], m1, b[2]), b[0]}};
  std::optional<Vec> P;
  for (auto& [u, v] : probes) {
    auto r = restrict_to_line(Q, u, v);
    if (r[2].is_zero()) {
      P = v;
      break;
    }
    auto roots = field_roots(r, F);
    if (!roots.empty()) {
      P = combo(one, u, roots.front(), v);
      break;
    }
  }
  if (!P) throw Error(Errc::no_solution, "no point of the conic found in the field");
  int a = -1, c = -1;
  for (int i = 0; i < 3 && a < 0; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (rank(Mat::from_rows({*P, b[i], b[j]})) == 3) {
        a = i;
        c = j;
        break;
      }
  const Vec &Q1 = b[a], &Q2 = b[c];
  BinForm qD = restrict_to_line(Q, Q1, Q2);
  BinForm BD = {polar(Q, *P, Q1) * Cyc(-2L), polar(Q, *P, Q2) * Cyc(-2L)};
  RationalCurve C;
  for (int i = 0; i < kVars; ++i) {
    BinForm lhs = qD;
    for (auto& e : lhs) e = e * (*P)[i];
    C.x[i] = bin_add(lhs, bin_mul(BD, BinForm{Q1[i], Q2[i]}));
  }
  if (!is_zero_form(restrict_to_curve(Q, C))) throw Error(Errc::degenerate, "conic parametrization check failed");
  return C;
}

RationalCurve rnc_through(const std::vector<Vec>& pts) {
  if (pts.size() != 7) throw Error(Errc::invalid_argument, "a rational normal quartic needs 7 points");
  Mat P(kVars, kVars);
  for (int j = 0; j < kVars; ++j)
    for (int i = 0; i < kVars; ++i) P(i, j) = pts[j][i];
  if (det(P).is_zero()) throw Error(Errc::degenerate, "first five points are not in general position");
  Vec c = inverse(P) * pts[5];
  Mat A = P;
  for (int j = 0; j < kVars; ++j) {
    if (c[j].is_zero()) throw Error(Errc::degenerate, "sixth point lies on a coordinate hyperplane");
    for (int i = 0; i < kVars; ++i) A(i, j) = P(i, j) * c[j];
  }
  Vec w = inverse(A) * pts[6];
  std::vector<Cyc> lam(kVars);
  for (int j = 0; j < kVars; ++j) {
    if (w[j].is_zero()) throw Error(Errc::degenerate, "seventh point lies on a coordinate hyperplane");
    lam[j] = -w[j].inv();
  }
  for (int i = 0; i < kVars; ++i)
    for (int j = i + 1; j < kVars; ++j)
      if (lam[i] == lam[j]) throw Error(Errc::degenerate, "points are not in general position");
  std::array<BinForm, kVars> base;
  for (int i = 0; i < kVars; ++i) {
    BinForm f = {Cyc(1L)};
    for (int j = 0; j < kVars; ++j)
      if (j != i) f = bin_mul(f, BinForm{-lam[j], Cyc(1L)});
    base[i] = f;
  }
  RationalCurve C;
  for (int i = 0; i < kVars; ++i) {
    C.x[i] = BinForm(5);
    for (int j = 0; j < kVars; ++j) {
      BinForm t = base[j];
      for (auto& e : t) e = e * A(i, j);
      C.x[i] = bin_add(C.x[i], t);
    }
  }
  return C;
}

RationalCurve transform(const RationalCurve& C, const Mat& g) {
  RationalCurve D;
  for (int i = 0; i < kVars; ++i) {
    D.x[i] = BinForm(C.degree() + 1);
    for (int j = 0; j < kVars; ++j) {
      if (g(i, j).is_zero()) continue;
      BinForm t = C.x[j];
      for (auto& e : t) e = e * g(i, j);
      D.x[i] = bin_add(D.x[i], t);
    }
  }
  return D;
}

Mat curve_span(const RationalCurve& C) {
  Mat m = Mat::from_rows(C.coefficient_vectors());
  auto piv = rref(m);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < piv.size(); ++r) rows.push_back(m.row(static_cast<int>(r)));
  return Mat::from_rows(rows);
}

std::vector<RationalCurve> curve_orbit(const RationalCurve& C, const Group& G) {
  std::vector<RationalCurve> out;
  std::set<Mat> seen;
  for (int g = 0; g < G.order(); ++g) {
    RationalCurve D = transform(C, G.elem(g));
    if (seen.insert(curve_span(D)).second) out.push_back(D);
  }
  return out;
}

BinForm restrict_to_curve(const Poly& F, const RationalCurve& C) {
  int d = F.homogeneous_degree();
  if (d < 0) throw Error(Errc::not_homogeneous, "restricted form must be homogeneous");
  std::array<BF, kVars> x;
  for (int i = 0; i < kVars; ++i) x[i].c = C.x[i];
  BF r = eval_generic<BF>(F, x, BF{}, BF{{Cyc(1L)}}, [](const Cyc& c, const BF& m) {
    BF s = m;
    for (auto& e : s.c) e = e * c;
    return s;
  });
  r.c.resize(static_cast<std::size_t>(d * C.degree() + 1));
  return r.c;
}

bool contains_curve(const std::vector<Poly>& forms, const RationalCurve& C) {
  for (auto& F : forms)
    if (!is_zero_form(restrict_to_curve(F, C))) return false;
  return true;
}

bool curve_contains_point(const RationalCurve& C, const Vec& p) {
  int e = C.degree();
  Vec inf(kVars);
  for (int i = 0; i < kVars; ++i) inf[i] = C.x[i][e];
  if (!all_zero(inf) && rank(Mat::from_rows({inf, p})) == 1) return true;
  std::vector<Cyc> g;
  for (int i = 0; i < kVars; ++i)
    for (int j = i + 1; j < kVars; ++j) {
      std::vector<Cyc> m(e + 1);
      for (int k = 0; k <= e; ++k) m[k] = p[i] * C.x[j][k] - p[j] * C.x[i][k];
      while (!m.empty() && m.back().is_zero()) m.pop_back();
      if (m.empty()) continue;
      g = g.empty() ? m : upoly_gcd(g, m);
      if (g.size() == 1) return false;
    }
  return g.size() > 1;
}

bool is_singular_at(const std::vector<Poly>& forms, const Vec& p) {
  if (forms.empty()) throw Error(Errc::invalid_argument, "no defining forms");
  for (auto& F : forms)
    if (!F.eval(p).is_zero()) throw Error(Errc::not_on_variety, "point does not lie on the variety");
  std::vector<Vec> rows;
  for (auto& F : forms) rows.push_back(grad(F, p));
  return rank(Mat::from_rows(rows)) < static_cast<int>(forms.size());
}

const char* sing_name(SingType t) {
  switch (t) {
    case SingType::A1: return "A1";
    case SingType::A2: return "A2";
    case SingType::smooth: return "smooth";
    default: return "other/unresolved";
  }
}

SingularityReport classify_singularity(const Poly& F, const Vec& p) {
  if (!is_singular_at({F}, p)) throw Error(Errc::smooth_point, "point is smooth");
  SingularityReport rep;
  rep.point = p;
  int j = chart_index(p);
  std::vector<int> idx;
  for (int i = 0; i < kVars; ++i)
    if (i != j) idx.push_back(i);
  Mat H(kVars - 1, kVars - 1);
  for (int a = 0; a < kVars - 1; ++a) {
    Poly da = F.diff(idx[a]);
    for (int b = a; b < kVars - 1; ++b) H(a, b) = H(b, a) = da.diff(idx[b]).eval(p);
  }
  auto ker = nullspace(H);
  rep.corank = static_cast<int>(ker.size());
  if (rep.corank == 0) {
    rep.type = SingType::A1;
  } else if (rep.corank == 1 && F.homogeneous_degree() >= 3) {
    Vec v(kVars);
    for (int a = 0; a < kVars - 1; ++a) v[idx[a]] = ker[0][a];
    auto r = restrict_to_line(F, p, v);
    rep.type = r[3].is_zero() ? SingType::other : SingType::A2;
  } else {
    rep.type = SingType::other;
  }
  return rep;
}

SingularityReport classify_surface_point(const Poly& F, const Poly& X, const Vec& p) {
  int dF = F.homogeneous_degree(), dX = X.homogeneous_degree();
  if (dF < dX) throw Error(Errc::invalid_argument, "first form must have degree at least that of the second");
  if (!is_singular_at({F, X}, p)) throw Error(Errc::smooth_point, "point is smooth on the surface");
  Vec gX = grad(X, p), gF = grad(F, p);
  if (all_zero(gX)) throw Error(Errc::invalid_argument, "second form is singular at the point");
  int k = 0;
  while (gX[k].is_zero()) ++k;
  Cyc mu = gF[k] / gX[k];
  int j = chart_index(p);
  Cyc pj = p[j];
  Poly Fp = F - X * Poly::var(j).pow(dF - dX) * (mu / pj.pow(dF - dX));
  Vec ej(kVars);
  ej[j] = Cyc(1L);
  auto T = nullspace(Mat::from_rows({ej, gX}));
  Mat H(3, 3);
  std::array<std::array<Cyc, kVars>, kVars> h;
  for (int a = 0; a < kVars; ++a) {
    Poly da = Fp.diff(a);
    for (int b = a; b < kVars; ++b) h[a][b] = h[b][a] = da.diff(b).eval(p);
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Cyc s;
      for (int u = 0; u < kVars; ++u)
        for (int v = 0; v < kVars; ++v)
          if (!T[a][u].is_zero() && !T[b][v].is_zero()) s += T[a][u] * h[u][v] * T[b][v];
      H(a, b) = s;
    }
  SingularityReport rep;
  rep.point = p;
  rep.corank = 3 - rank(H);
  rep.type = rep.corank == 0 ? SingType::A1 : SingType::other;
  return rep;
}

bool singular_along(const Poly& A, const Poly& B, const RationalCurve& C) {
  std::array<BinForm, kVars> a, b;
  for (int i = 0; i < kVars; ++i) {
    a[i] = restrict_to_curve(A.diff(i), C);
    b[i] = restrict_to_curve(B.diff(i), C);
  }
  for (int i = 0; i < kVars; ++i)
    for (int j = i + 1; j < kVars; ++j) {
      BinForm m = bin_mul(a[i], b[j]);
      BinForm n = bin_mul(a[j], b[i]);
      for (auto& e : n) e = -e;
      if (!is_zero_form(bin_add(m, n))) return false;
    }
  return true;
}

namespace {

std::vector<Vec> line_basis(const RationalCurve& L) {
  if (L.degree() != 1) throw Error(Errc::invalid_argument, "curve is not a line");
  auto v = L.coefficient_vectors();
  if (rank(Mat::from_rows(v)) != 2) throw Error(Errc::degenerate, "degenerate line");
  return v;
}

}  // namespace

bool lines_pairwise_disjoint(const std::vector<RationalCurve>& lines) {
  std::vector<std::vector<Vec>> b;
  for (auto& L : lines) b.push_back(line_basis(L));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (rank(Mat::from_rows({b[i][0], b[i][1], b[j][0], b[j][1]})) < 4) return false;
  return true;
}

std::optional<Vec> line_intersection(const RationalCurve& a, const RationalCurve& b) {
  auto u = line_basis(a), v = line_basis(b);
  int r = rank(Mat::from_rows({u[0], u[1], v[0], v[1]}));
  if (r == 4) return std::nullopt;
  if (r == 2) throw Error(Errc::invalid_argument, "lines coincide");
  Mat M(kVars, 4);
  for (int i = 0; i < kVars; ++i) {
    M(i, 0) = u[0][i];
    M(i, 1) = u[1][i];
    M(i, 2) = -v[0][i];
    M(i, 3) = -v[1][i];
  }
  auto ns = nullspace(M);
  return normalize_point(combo(ns[0][0], u[0], ns[0][1], u[1]));
}

namespace {

std::vector<Vec> condition_rows(const LinearSystemSpec& spec, const std::vector<Exps>& mons) {
  std::vector<Vec> rows;
  for (auto& p : spec.points) {
    Vec r;
    r.reserve(mons.size());
    for (auto& e : mons) {
      Cyc v(1L);
      for (int i = 0; i < kVars; ++i)
        if (e[i]) v = v * p[i].pow(e[i]);
      r.push_back(v);
    }
    rows.push_back(std::move(r));
  }
  for (auto& C : spec.curves) {
    std::array<std::vector<BinForm>, kVars> pw;
    for (int i = 0; i < kVars; ++i) {
      pw[i].push_back({Cyc(1L)});
      for (int k = 1; k <= spec.degree; ++k) pw[i].push_back(bin_mul(pw[i].back(), C.x[i]));
    }
    int n = spec.degree * C.degree() + 1;
    std::vector<Vec> block(n, Vec(mons.size()));
    for (std::size_t m = 0; m < mons.size(); ++m) {
      BinForm f = {Cyc(1L)};
      for (int i = 0; i < kVars; ++i)
        if (mons[m][i]) f = bin_mul(f, pw[i][mons[m][i]]);
      for (int k = 0; k < n && k < static_cast<int>(f.size()); ++k) block[k][m] = f[k];
    }
    for (auto& r : block) rows.push_back(std::move(r));
  }
  return rows;
}

Vec coords_of(const Poly& p, const std::vector<Exps>& mons) {
  Vec v;
  for (auto& e : mons) v.push_back(p.coeff(e));
  return v;
}

}  // namespace

std::vector<Poly> linear_system_basis(const LinearSystemSpec& spec) {
  if (spec.degree < 1) throw Error(Errc::invalid_argument, "degree must be positive");
  auto mons = monomials_of_degree(spec.degree);
  auto rows = condition_rows(spec, mons);
  std::vector<Vec> ker;
  if (rows.empty()) {
    for (std::size_t m = 0; m < mons.size(); ++m) {
      Vec v(mons.size());
      v[m] = Cyc(1L);
      ker.push_back(v);
    }
  } else {
    ker = nullspace(Mat::from_rows(rows));
  }
  std::vector<Poly> out;
  for (auto& v : ker) {
    Poly p;
    for (std::size_t m = 0; m < mons.size(); ++m)
      if (!v[m].is_zero()) p += Poly::monomial(mons[m], v[m]);
    out.push_back(p);
  }
  return out;
}

int linear_system_dim(const LinearSystemSpec& spec, const Poly* modulo) {
  auto basis = linear_system_basis(spec);
  int k = static_cast<int>(basis.size());
  if (!modulo || k == 0) return k;
  int dv = modulo->homogeneous_degree();
  if (dv < 0) throw Error(Errc::not_homogeneous, "modulus must be homogeneous");
  if (dv > spec.degree) return k;
  auto mons = monomials_of_degree(spec.degree);
  std::vector<Vec> kr, mr;
  for (auto& p : basis) kr.push_back(coords_of(p, mons));
  for (auto& e : monomials_of_degree(spec.degree - dv)) mr.push_back(coords_of(*modulo * Poly::monomial(e), mons));
  std::vector<Vec> both = kr;
  both.insert(both.end(), mr.begin(), mr.end());
  int meet = k + rank(Mat::from_rows(mr)) - rank(Mat::from_rows(both));
  return k - meet;
}

BaseFreeResult base_curve_free(const LinearSystemSpec& spec, const Poly* ambient,
                               const std::vector<RationalCurve>& probes) {
  BaseFreeResult res;
  auto basis = linear_system_basis(spec);
  res.dim = ambient ? linear_system_dim(spec, ambient) : static_cast<int>(basis.size());
  res.free = true;
  for (auto& C : probes) {
    std::string w = "none";
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!is_zero_form(restrict_to_curve(basis[i], C))) {
        w = std::to_string(i);
        break;
      }
    if (w == "none") res.free = false;
    res.witnesses.push_back(w);
  }
  return res;
}

PencilPoint pencil_condition(const Poly& A, const Poly& B, const Poly& X, const Vec& p) {
  if (!X.eval(p).is_zero()) throw Error(Errc::not_on_variety, "point does not lie on the ambient variety");
  Vec gA = grad(A, p), gB = grad(B, p), gX = grad(X, p);
  Mat M(kVars + 1, 3);
  M(0, 0) = A.eval(p);
  M(0, 1) = B.eval(p);
  for (int i = 0; i < kVars; ++i) {
    M(i + 1, 0) = gA[i];
    M(i + 1, 1) = gB[i];
    M(i + 1, 2) = -gX[i];
  }
  PencilPoint r;
  r.point = p;
  auto ns = nullspace(M);
  std::vector<Vec> useful;
  for (auto& v : ns)
    if (!v[0].is_zero() || !v[1].is_zero()) useful.push_back(v);
  if (useful.empty()) return r;
  r.singular_member = true;
  Mat pr(static_cast<int>(ns.size()), 2);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    pr(static_cast<int>(i), 0) = ns[i][0];
    pr(static_cast<int>(i), 1) = ns[i][1];
  }
  if (rank(pr) == 2) {
    r.every_member = true;
    return r;
  }
  r.a1 = useful[0][0];
  r.a2 = useful[0][1];
  if (!r.a2.is_zero()) {
    r.a1 = r.a1 / r.a2;
    r.a2 = Cyc(1L);
  } else {
    r.a1 = Cyc(1L);
  }
  return r;
}

std::vector<PencilMember> pencil_singular_parameters(const Poly& A, const Poly& B, const Poly& X,
                                                     const std::vector<Vec>& points) {
  std::vector<PencilMember> out;
  for (auto& p : points) {
    auto c = pencil_condition(A, B, X, p);
    if (!c.singular_member) continue;
    if (c.every_member) throw Error(Errc::degenerate, "every pencil member is singular at a candidate point");
    auto it = std::find_if(out.begin(), out.end(), [&](const PencilMember& m) { return m.a1 == c.a1 && m.a2 == c.a2; });
    if (it == out.end()) out.push_back({c.a1, c.a2, {p}});
    else it->points.push_back(p);
  }
  return out;
}

bool same_parameter(const Cyc& a1, const Cyc& a2, const Cyc& b1, const Cyc& b2) {
  if ((a1.is_zero() && a2.is_zero()) || (b1.is_zero() && b2.is_zero())) return false;
  return a1 * b2 == a2 * b1;
}

bool in_ideal_degree(const std::vector<Poly>& gens, const Poly& h) {
  int d = h.homogeneous_degree();
  if (h.is_zero()) return true;
  if (d < 0) throw Error(Errc::not_homogeneous, "form must be homogeneous");
  auto mons = monomials_of_degree(d);
  std::vector<Vec> rows;
  for (auto& g : gens) {
    int dg = g.homogeneous_degree();
    if (dg < 0 || dg > d) continue;
    for (auto& e : monomials_of_degree(d - dg)) rows.push_back(coords_of(g * Poly::monomial(e), mons));
  }
  if (rows.empty()) return false;
  int r = rank(Mat::from_rows(rows));
  rows.push_back(coords_of(h, mons));
  return rank(Mat::from_rows(rows)) == r;
}

namespace {

using UPoly = std::vector<Cyc>;  // lowest degree first

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Form in x1..x3 with x1 = u, x3 = 1, as a polynomial in x2.
UPoly in_v(const Poly& G, const Cyc& u) {
  UPoly out;
  for (auto& [k, c] : G.terms()) {
    Exps e = unpack(k);
    if (static_cast<int>(out.size()) <= e[1]) out.resize(e[1] + 1, Cyc(0L));
    Cyc t = c;
    for (int i = 0; i < e[0]; ++i) t = t * u;
    out[e[1]] += t;
  }
  trim(out);
  return out;
}

int v_degree(const Poly& G) {
  int d = 0;
  for (auto& [k, c] : G.terms()) d = std::max(d, unpack(k)[1]);
  return d;
}

// Sylvester resultant with formal degrees m, n.
Cyc resultant(UPoly a, UPoly b, int m, int n) {
  a.resize(m + 1, Cyc(0L));
  b.resize(n + 1, Cyc(0L));
  if (m + n == 0) return Cyc(1L);
  Mat S(m + n, m + n);
  for (int i = 0; i < m + n; ++i)
    for (int j = 0; j < m + n; ++j) S(i, j) = Cyc(0L);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) S(i, i + j) = a[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) S(n + i, i + j) = b[n - j];
  return det(S);
}

UPoly interpolate(const std::vector<Cyc>& xs, const std::vector<Cyc>& ys) {
  std::size_t n = xs.size();
  UPoly out(n, Cyc(0L));
  for (std::size_t i = 0; i < n; ++i) {
    UPoly basis{Cyc(1L)};
    Cyc den(1L);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      UPoly next(basis.size() + 1, Cyc(0L));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = next;
      den = den * (xs[i] - xs[j]);
    }
    Cyc s = ys[i] / den;
    for (std::size_t k = 0; k < basis.size(); ++k) out[k] += basis[k] * s;
  }
  trim(out);
  return out;
}

UPoly gcd_all(const std::vector<UPoly>& ps, const Field* F) {
  UPoly g;
  for (auto p : ps) {
    trim(p);
    for (auto& c : p) c = c.in(F);
    if (p.empty()) continue;
    g = g.empty() ? p : upoly_gcd(g, p);
    trim(g);
  }
  return g;
}

}  // namespace

SpanSingularities singular_points_in_span(const Poly& F, const std::vector<Vec>& basis) {
  int k = static_cast<int>(basis.size());
  if (k < 2 || k > 3) throw Error(Errc::invalid_argument, "span must be a line or a plane");
  const Field* Fd = field_of(basis[0]);
  for (auto& [key, c] : F.terms())
    if (c.field() && c.field()->conductor() > Fd->conductor()) Fd = c.field();
  std::array<Poly, kVars> img;
  for (int j = 0; j < kVars; ++j)
    for (int b = 0; b < k; ++b)
      if (!basis[b][j].is_zero()) img[j] += Poly::var(b) * basis[b][j];
  std::vector<Poly> G;
  for (int i = 0; i < kVars; ++i) {
    Poly g = F.diff(i).substitute(img);
    if (!g.is_zero()) G.push_back(g);
  }
  SpanSingularities out;
  std::set<Vec> found;
  auto add = [&](const Vec& p) {
    if (all_zero(p)) return;
    for (int i = 0; i < kVars; ++i)
      if (!F.diff(i).eval(p).is_zero()) return;
    found.insert(normalize_point(p));
  };
  auto point = [&](const Cyc& a, const Cyc& b, const Cyc& c) {
    Vec p(kVars, Cyc(0L));
    for (int i = 0; i < kVars; ++i) {
      p[i] = basis[0][i] * a + basis[1][i] * b;
      if (k == 3) p[i] += basis[2][i] * c;
    }
    return p;
  };
  // Line part: the span of the first two vectors (x3 = 0 in the plane case), x1 = t x2 or x2 = 0.
  {
    std::vector<UPoly> ps;
    bool vanish_at_inf = true;
    for (auto& g : G) {
      UPoly p;
      for (auto& [key, c] : g.terms()) {
        Exps e = unpack(key);
        if (e[2] != 0) continue;
        if (static_cast<int>(p.size()) <= e[0]) p.resize(e[0] + 1, Cyc(0L));
        p[e[0]] += c;
      }
      trim(p);
      ps.push_back(p);
      int top = g.homogeneous_degree();
      Exps e{};
      e[0] = top;
      if (!g.coeff(e).is_zero()) vanish_at_inf = false;
    }
    if (vanish_at_inf) add(point(Cyc(1L), Cyc(0L), Cyc(0L)));
    bool all_empty = std::all_of(ps.begin(), ps.end(), [](const UPoly& p) { return p.empty(); });
    if (all_empty) {
      out.complete = false;  // the whole line is singular
    } else {
      UPoly g = gcd_all(ps, Fd);
      bool complete = true;
      int distinct = 0;
      auto roots = field_roots(g, Fd, &complete, &distinct);
      if (!complete || static_cast<int>(roots.size()) < distinct) out.complete = false;
      for (auto& t : roots) add(point(t, Cyc(1L), Cyc(0L)));
    }
  }
  if (k == 3) {
    // Affine chart x3 = 1: eliminate x2 pairwise, keep the gcd of the resultants in x1.
    std::vector<UPoly> res;
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = i + 1; j < G.size(); ++j) {
        int m = v_degree(G[i]), n = v_degree(G[j]);
        // each coefficient of x2^k has degree at most deg - k in x1
        int bound = n * G[i].homogeneous_degree() + m * G[j].homogeneous_degree();
        std::vector<Cyc> xs, ys;
        for (int s = 0; s <= bound; ++s) {
          Cyc u(static_cast<long>(s) - bound / 2);
          xs.push_back(u);
          ys.push_back(resultant(in_v(G[i], u), in_v(G[j], u), m, n));
        }
        res.push_back(interpolate(xs, ys));
      }
    UPoly R = gcd_all(res, Fd);
    if (R.empty()) {
      out.complete = false;  // singular along a curve in the plane
    } else {
      bool complete = true;
      int distinct = 0;
      auto us = field_roots(R, Fd, &complete, &distinct);
      if (!complete || static_cast<int>(us.size()) < distinct) out.complete = false;
      for (auto& u : us) {
        std::vector<UPoly> ps;
        for (auto& g : G) ps.push_back(in_v(g, u));
        bool all_empty = std::all_of(ps.begin(), ps.end(), [](const UPoly& p) { return p.empty(); });
        if (all_empty) {
          out.complete = false;
          continue;
        }
        UPoly g = gcd_all(ps, Fd);
        bool c2 = true;
        int d2 = 0;
        auto vs = field_roots(g, Fd, &c2, &d2);
        if (!c2 || static_cast<int>(vs.size()) < d2) out.complete = false;
        for (auto& v : vs) add(point(u, v, Cyc(1L)));
      }
    }
  }
  out.points.assign(found.begin(), found.end());
  return out;
}

}  // namespace a5g
