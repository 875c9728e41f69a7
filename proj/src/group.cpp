#include "a5geom/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace a5g {

Vec normalize_point(Vec p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    if (p[i].is_one()) return p;
    Cyc inv = p[i].inv();
    for (std::size_t j = i; j < p.size(); ++j) p[j] = p[j] * inv;
    return p;
  }
  throw Error(Errc::invalid_argument, "zero vector is not a projective point");
}

Mat normalize_matrix(Mat m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        if (m(i, j).is_one()) return m;
        return m.scaled(m(i, j).inv());
      }
  throw Error(Errc::not_invertible, "zero matrix");
}

namespace {

struct LinearGroup {
  std::vector<Mat> elems;
  std::map<Mat, int> index;
};

LinearGroup close_linear(const std::vector<Mat>& gens, std::size_t cap) {
  LinearGroup L;
  int n = gens.empty() ? kVars : gens[0].rows();
  Mat id = Mat::identity(n);
  L.elems.push_back(id);
  L.index[id] = 0;
  for (std::size_t head = 0; head < L.elems.size(); ++head) {
    for (auto& g : gens) {
      Mat p = L.elems[head] * g;
      if (L.index.count(p)) continue;
      if (L.elems.size() >= cap)
        throw Error(Errc::bound_exceeded, "group enumeration exceeded the element bound");
      L.index[p] = static_cast<int>(L.elems.size());
      L.elems.push_back(p);
    }
  }
  return L;
}

Mat commutator(const Mat& a, const Mat& b, const Mat& ai, const Mat& bi) { return a * b * ai * bi; }

}  // namespace

Group enumerate_group(const std::vector<Mat>& gens_in, std::size_t bound) {
  Group G;
  if (gens_in.empty()) throw Error(Errc::invalid_argument, "no generators");
  for (auto& g : gens_in) {
    if (g.rows() != kVars || g.cols() != kVars) throw Error(Errc::invalid_argument, "generators must be 5x5");
    if (det(g).is_zero()) throw Error(Errc::not_invertible, "generator is not invertible");
    for (int i = 0; i < kVars && !G.F_; ++i)
      for (int j = 0; j < kVars && !G.F_; ++j)
        if (g(i, j).field()) G.F_ = g(i, j).field();
  }
  std::vector<Mat> gens;
  for (auto& g : gens_in) gens.push_back(normalize_matrix(g));
  G.gen_mats_ = gens;
  LinearGroup L = close_linear(gens, bound * 24);
  for (auto& m : L.elems) {
    Mat key = normalize_matrix(m);
    if (G.index_.count(key)) continue;
    if (G.elems_.size() >= bound) throw Error(Errc::bound_exceeded, "group enumeration exceeded the element bound");
    G.index_[key] = static_cast<int>(G.elems_.size());
    G.elems_.push_back(key);
    G.lifts_.push_back(m);
  }
  for (auto& g : gens) G.gens_.push_back(G.index_.at(normalize_matrix(g)));

  // Normal closure of commutators of the generators inside L.
  std::vector<Mat> ginv;
  for (auto& g : gens) ginv.push_back(inverse(g));
  std::vector<Mat> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(gens[i], gens[j], ginv[i], ginv[j]));
  if (seeds.empty()) {
    G.core_ = {Mat::identity(kVars)};
  } else {
    for (;;) {
      LinearGroup C = close_linear(seeds, bound * 24);
      bool grew = false;
      for (std::size_t k = 0; k < gens.size() && !grew; ++k)
        for (auto& s : seeds) {
          Mat c = gens[k] * s * ginv[k];
          if (!C.index.count(c)) {
            seeds.push_back(c);
            grew = true;
            break;
          }
        }
      if (!grew) {
        G.core_ = C.elems;
        break;
      }
    }
  }
  G.memo_->table.assign(G.elems_.size() * G.elems_.size(), -1);
  return G;
}

int Group::index_of(const Mat& m) const {
  auto it = index_.find(normalize_matrix(m));
  return it == index_.end() ? -1 : it->second;
}

int Group::mul(int a, int b) const {
  std::size_t n = elems_.size();
  std::size_t slot = static_cast<std::size_t>(a) * n + b;
  {
    std::lock_guard<std::mutex> lk(memo_->mu);
    if (memo_->table[slot] >= 0) return memo_->table[slot];
  }
  int r = index_of(elems_[a] * elems_[b]);
  if (r < 0) throw Error(Errc::invalid_argument, "group is not closed under products");
  std::lock_guard<std::mutex> lk(memo_->mu);
  memo_->table[slot] = r;
  return r;
}

int Group::inv(int a) const {
  int r = index_of(inverse(elems_[a]));
  if (r < 0) throw Error(Errc::invalid_argument, "group is not closed under inverses");
  return r;
}

int Group::elem_order(int a) const {
  int k = 1, cur = a;
  while (cur != 0) {
    cur = mul(cur, a);
    ++k;
  }
  return k;
}

std::map<int, int> Group::census() const {
  std::map<int, int> c;
  for (int i = 0; i < order(); ++i) ++c[elem_order(i)];
  return c;
}

Vec Group::act(int g, const Vec& p) const { return normalize_point(elems_[g] * p); }

std::vector<int> subgroup_closure(const Group& G, const std::vector<int>& gens, std::size_t cap) {
  std::vector<char> in(G.order(), 0);
  std::vector<int> out{0};
  in[0] = 1;
  for (std::size_t h = 0; h < out.size(); ++h)
    for (int g : gens) {
      int p = G.mul(out[h], g);
      if (in[p]) continue;
      in[p] = 1;
      out.push_back(p);
      if (out.size() > cap) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool PointOrbit::contains(const Vec& p) const {
  Vec q = normalize_point(p);
  return std::binary_search(points.begin(), points.end(), q);
}

PointOrbit orbit_of(const Vec& p, const Group& G) {
  Vec q = normalize_point(p);
  std::set<Vec> seen;
  for (int g = 0; g < G.order(); ++g) seen.insert(G.act(g, q));
  PointOrbit o;
  o.points.assign(seen.begin(), seen.end());
  o.group_order = G.order();
  return o;
}

std::vector<int> stabilizer(const Vec& p, const Group& G) {
  Vec q = normalize_point(p);
  std::vector<int> s;
  for (int g = 0; g < G.order(); ++g)
    if (G.act(g, q) == q) s.push_back(g);
  return s;
}

namespace {

// Coefficient vector of a degree-d form over the monomial basis.
Vec coords(const Poly& p, const std::vector<Exps>& mons) {
  Vec v(mons.size());
  for (std::size_t i = 0; i < mons.size(); ++i) v[i] = p.coeff(mons[i]);
  return v;
}

Poly from_coords(const Vec& v, const std::vector<Exps>& mons) {
  Poly p;
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (!v[i].is_zero()) p += Poly::monomial(mons[i], v[i]);
  return p;
}

std::vector<Vec> row_basis(const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  Mat m = Mat::from_rows(rows);
  auto piv = rref(m);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(m.row(static_cast<int>(i)));
  return out;
}

}  // namespace

std::vector<Poly> invariant_forms(const Group& G, int d) {
  if (d < 1) throw Error(Errc::invalid_argument, "degree must be positive");
  auto mons = monomials_of_degree(d);
  std::vector<Vec> sums(mons.size(), Vec(mons.size()));
  for (auto& h : G.core()) {
    std::array<Poly, kVars> img;
    for (int i = 0; i < kVars; ++i)
      for (int j = 0; j < kVars; ++j)
        if (!h(i, j).is_zero()) img[i] += Poly::var(j) * h(i, j);
    for (std::size_t m = 0; m < mons.size(); ++m) {
      Poly t = Poly::monomial(mons[m]).substitute(img);
      for (auto& [k, c] : t.terms()) {
        Exps e = unpack(k);
        auto it = std::find(mons.begin(), mons.end(), e);
        sums[m][it - mons.begin()] += c;
      }
    }
  }
  std::vector<Vec> basis = row_basis(sums);
  // Generators acting outside the image of the core: keep their fixed part.
  std::set<int> core_img;
  for (auto& h : G.core()) core_img.insert(G.index_of(h));
  for (std::size_t gi = 0; gi < G.gen_matrices().size(); ++gi) {
    if (basis.empty()) break;
    if (core_img.count(G.gens()[gi])) continue;
    const Mat& g = G.gen_matrices()[gi];
    Mat diffs(static_cast<int>(mons.size()), static_cast<int>(basis.size()));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Poly p = from_coords(basis[b], mons);
      Vec dv = coords(p.compose_linear(g) - p, mons);
      for (std::size_t r = 0; r < mons.size(); ++r) diffs(static_cast<int>(r), static_cast<int>(b)) = dv[r];
    }
    std::vector<Vec> next;
    for (auto& x : nullspace(diffs)) {
      Vec v(mons.size());
      for (std::size_t b = 0; b < basis.size(); ++b)
        if (!x[b].is_zero())
          for (std::size_t r = 0; r < mons.size(); ++r) v[r] += x[b] * basis[b][r];
      next.push_back(v);
    }
    basis = row_basis(next);
  }
  std::vector<Poly> out;
  for (auto& v : basis) out.push_back(from_coords(v, mons));
  return out;
}

Invariance is_invariant(const Poly& F, const Group& G) {
  Invariance r;
  if (F.is_zero() || F.homogeneous_degree() < 0) throw Error(Errc::not_homogeneous, "form must be homogeneous and nonzero");
  r.invariant = true;
  for (auto& g : G.gen_matrices()) {
    Poly t = F.compose_linear(g);
    auto it = t.terms().find(F.leading_key());
    Cyc c = it == t.terms().end() ? Cyc() : it->second / F.leading_coeff();
    r.scalars.push_back(c);
    if (c.is_zero() || t != F * c) r.invariant = false;
  }
  return r;
}

std::vector<Subspace> fixed_locus(const Group& G, const std::vector<int>& sub_gens) {
  const Field* F = G.field();
  std::vector<Subspace> cur(1);
  for (int i = 0; i < kVars; ++i) {
    Vec e(kVars);
    e[i] = Cyc(1L);
    cur[0].basis.push_back(e);
  }
  for (int gi : sub_gens) {
    const Mat& a = G.lift(gi);
    // linear order of the lift
    Mat p = a;
    int n = 1;
    Mat id = Mat::identity(kVars);
    while (!(p == id)) {
      p = p * a;
      if (++n > 100000) throw Error(Errc::invalid_argument, "lift has no finite order");
    }
    int N = F ? F->conductor() : 1;
    std::vector<Cyc> evs;
    for (long j = 0; j < n; ++j) {
      long g = std::gcd(static_cast<long>(n), j);
      long ord = n / g;
      if (N % ord != 0 && !(ord == 2)) continue;
      evs.push_back(ord == 1 ? Cyc(1L) : (ord == 2 ? Cyc(-1L) : Cyc::zeta(F, ord, j / g)));
    }
    std::vector<Subspace> next;
    for (auto& S : cur) {
      for (auto& lam : evs) {
        Mat m(kVars, static_cast<int>(S.basis.size()));
        for (std::size_t b = 0; b < S.basis.size(); ++b) {
          Vec w = a * S.basis[b];
          for (int r = 0; r < kVars; ++r) m(r, static_cast<int>(b)) = w[r] - lam * S.basis[b][r];
        }
        auto ker = nullspace(m);
        if (ker.empty()) continue;
        std::vector<Vec> vs;
        for (auto& x : ker) {
          Vec v(kVars);
          for (std::size_t b = 0; b < S.basis.size(); ++b)
            if (!x[b].is_zero())
              for (int r = 0; r < kVars; ++r) v[r] += x[b] * S.basis[b][r];
          vs.push_back(v);
        }
        Subspace T;
        T.basis = row_basis(vs);
        T.character = S.character;
        T.character.push_back(lam);
        next.push_back(T);
      }
    }
    cur = next;
  }
  return cur;
}

namespace {

struct UP {
  std::vector<Cyc> c;
  UP operator+(const UP& o) const {
    UP r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    return r;
  }
  UP operator*(const UP& o) const {
    UP r;
    if (c.empty() || o.c.empty()) return r;
    r.c.resize(c.size() + o.c.size() - 1);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero())
        for (std::size_t j = 0; j < o.c.size(); ++j)
          if (!o.c[j].is_zero()) r.c[i + j] += c[i] * o.c[j];
    return r;
  }
};

}  // namespace

std::vector<Cyc> restrict_to_line(const Poly& F, const Vec& u, const Vec& v) {
  std::array<UP, kVars> x;
  for (int i = 0; i < kVars; ++i) x[i].c = {u[i], v[i]};
  UP r = eval_generic<UP>(F, x, UP{}, UP{{Cyc(1L)}}, [](const Cyc& c, const UP& m) {
    UP s = m;
    for (auto& e : s.c) e = e * c;
    return s;
  });
  int d = F.homogeneous_degree();
  if (d < 0) throw Error(Errc::not_homogeneous, "restricted form must be homogeneous");
  r.c.resize(d + 1);
  return r.c;
}

namespace {

std::string render_form(const std::vector<Cyc>& c) {
  std::string s;
  int d = static_cast<int>(c.size()) - 1;
  for (int i = 0; i <= d; ++i) {
    if (c[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + render(c[i]) + ")*s^" + std::to_string(d - i) + "*t^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

std::string render_space(const std::vector<Vec>& basis) {
  std::string s = "span{";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) s += ", ";
    s += "[";
    for (int j = 0; j < kVars; ++j) s += (j ? ":" : "") + render(basis[i][j]);
    s += "]";
  }
  return s + "}";
}

}  // namespace

OrbitScan small_orbits_on(const Group& G, const Poly& X, int max_len) {
  OrbitScan scan;
  if (max_len < 1 || max_len > G.order()) throw Error(Errc::invalid_argument, "max_len must lie in [1, |G|]");
  int n = G.order();
  std::size_t hmin = static_cast<std::size_t>((n + max_len - 1) / max_len);
  std::size_t cap = static_cast<std::size_t>(std::max(12, n / 5));

  struct Sub {
    std::vector<int> elems, gens;
  };
  std::vector<Sub> subs;
  std::set<std::vector<int>> seen;
  std::vector<Sub> cyclic;
  for (int g = 1; g < n; ++g) {
    auto e = subgroup_closure(G, {g});
    if (seen.insert(e).second) cyclic.push_back({e, {g}});
  }
  subs = cyclic;
  for (std::size_t i = 0; i < cyclic.size(); ++i)
    for (std::size_t j = i + 1; j < cyclic.size(); ++j) {
      auto e = subgroup_closure(G, {cyclic[i].gens[0], cyclic[j].gens[0]}, cap);
      if (e.size() > cap) continue;
      if (seen.insert(e).second) subs.push_back({e, {cyclic[i].gens[0], cyclic[j].gens[0]}});
    }
  std::sort(subs.begin(), subs.end(), [](const Sub& a, const Sub& b) {
    return a.elems.size() != b.elems.size() ? a.elems.size() > b.elems.size() : a.elems < b.elems;
  });

  std::set<Vec> candidates;
  std::set<std::string> notes;
  for (auto& H : subs) {
    if (H.elems.size() < hmin) continue;
    for (auto& S : fixed_locus(G, H.gens)) {
      int k = static_cast<int>(S.basis.size());
      if (k == 1) {
        if (X.eval(S.basis[0]).is_zero()) candidates.insert(normalize_point(S.basis[0]));
      } else if (k == 2) {
        auto f = restrict_to_line(X, S.basis[0], S.basis[1]);
        bool all_zero = std::all_of(f.begin(), f.end(), [](const Cyc& c) { return c.is_zero(); });
        if (all_zero) {
          notes.insert("fixed line of a subgroup of order " + std::to_string(H.elems.size()) + " lies in the variety: " +
                       render_space(S.basis));
          scan.families.push_back(S.basis);
          scan.complete = false;
          continue;
        }
        // s = 0 gives the second basis vector
        int top = static_cast<int>(f.size()) - 1;
        int mult_inf = 0;
        while (top - mult_inf >= 0 && f[top - mult_inf].is_zero()) ++mult_inf;
        if (mult_inf > 0) candidates.insert(normalize_point(S.basis[1]));
        bool complete = true;
        int distinct = 0;
        auto roots = field_roots(f, G.field(), &complete, &distinct);
        for (auto& t : roots) {
          Vec p(kVars);
          for (int i = 0; i < kVars; ++i) p[i] = S.basis[0][i] + t * S.basis[1][i];
          candidates.insert(normalize_point(p));
        }
        if (!complete || static_cast<int>(roots.size()) < distinct)
          notes.insert("roots outside the field on a fixed line " + render_space(S.basis) + ": restricted form " +
                       render_form(f));
      } else {
        std::array<Poly, kVars> img;
        for (int j = 0; j < kVars; ++j)
          for (int b = 0; b < k; ++b)
            if (!S.basis[b][j].is_zero()) img[j] += Poly::var(b) * S.basis[b][j];
        bool inside = X.substitute(img).is_zero();
        std::string what = inside ? "lies in the variety" : "meets the variety in a positive-dimensional family";
        notes.insert("fixed subspace of projective dimension " + std::to_string(k - 1) + " of a subgroup of order " +
                     std::to_string(H.elems.size()) + " " + what + ": " + render_space(S.basis));
        scan.families.push_back(S.basis);
        scan.complete = false;
      }
    }
  }
  std::set<Vec> covered;
  for (auto& p : candidates) {
    if (covered.count(p)) continue;
    PointOrbit o = orbit_of(p, G);
    for (auto& q : o.points) covered.insert(q);
    if (static_cast<int>(o.length()) <= max_len) scan.orbits.push_back(o);
  }
  std::sort(scan.orbits.begin(), scan.orbits.end(), [](const PointOrbit& a, const PointOrbit& b) {
    return a.length() != b.length() ? a.length() < b.length() : a.rep() < b.rep();
  });
  scan.notes.assign(notes.begin(), notes.end());
  return scan;
}

}  // namespace a5g
