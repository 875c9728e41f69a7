#include "a5geom/lattice.hpp"

#include <algorithm>
#include <cctype>

namespace a5g {

IntersectionContext::IntersectionContext(std::vector<std::string> names, int arity)
    : names_(std::move(names)), arity_(arity) {
  if (arity != 2 && arity != 3) throw Error(Errc::invalid_argument, "context arity must be 2 or 3");
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) n *= names_.size();
  table_.assign(n, Rat(0));
}

int IntersectionContext::index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error(Errc::not_found, "unknown generator: " + name);
  return static_cast<int>(it - names_.begin());
}

std::size_t IntersectionContext::flat(const std::vector<int>& slots) const {
  if (static_cast<int>(slots.size()) != arity_) throw Error(Errc::invalid_argument, "wrong number of slots");
  std::size_t k = 0;
  for (int s : slots) {
    if (s < 0 || s >= rank()) throw Error(Errc::invalid_argument, "generator index out of range");
    k = k * names_.size() + static_cast<std::size_t>(s);
  }
  return k;
}

void IntersectionContext::set(const std::vector<int>& slots, const Rat& v) {
  std::vector<int> p = slots;
  std::sort(p.begin(), p.end());
  do table_[flat(p)] = v;
  while (std::next_permutation(p.begin(), p.end()));
}

Rat IntersectionContext::get(const std::vector<int>& slots) const { return table_[flat(slots)]; }

namespace {

void same_ctx(const DivisorClass& a, const DivisorClass& b) {
  if (!a.ctx || a.ctx != b.ctx) throw Error(Errc::invalid_argument, "divisor classes from different contexts");
}

}  // namespace

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  same_ctx(*this, o);
  DivisorClass r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
  same_ctx(*this, o);
  DivisorClass r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

DivisorClass DivisorClass::operator*(const Rat& s) const {
  DivisorClass r = *this;
  for (auto& v : r.c) v *= s;
  return r;
}

DivisorClass generator(const ContextPtr& ctx, const std::string& name) {
  DivisorClass d{ctx, std::vector<Rat>(ctx->rank(), Rat(0))};
  d.c[ctx->index(name)] = 1;
  return d;
}

DivisorClass parse_divisor(const ContextPtr& ctx, const std::string& text) {
  DivisorClass d{ctx, std::vector<Rat>(ctx->rank(), Rat(0))};
  std::size_t i = 0, n = text.size();
  auto skip = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool any = false;
  while (true) {
    skip();
    if (i == n) break;
    Rat sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (any) {
      throw Error(Errc::syntax, "expected + or - in divisor: " + text);
    }
    Rat coef = 1;
    if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < n && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
      coef = Rat(text.substr(i, j - i));
      coef.canonicalize();
      i = j;
      skip();
      if (i < n && text[i] == '*') {
        ++i;
        skip();
      }
    }
    std::size_t j = i;
    while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '\'' || text[j] == '_')) ++j;
    if (j == i) throw Error(Errc::syntax, "expected a generator name in divisor: " + text);
    d.c[ctx->index(text.substr(i, j - i))] += sign * coef;
    i = j;
    any = true;
  }
  if (!any) throw Error(Errc::syntax, "empty divisor");
  return d;
}

Rat pair(const DivisorClass& a, const DivisorClass& b) {
  same_ctx(a, b);
  if (a.ctx->arity() != 2) throw Error(Errc::invalid_argument, "pairing needs a surface context");
  Rat s = 0;
  for (int i = 0; i < a.ctx->rank(); ++i)
    for (int j = 0; j < a.ctx->rank(); ++j)
      if (a.c[i] != 0 && b.c[j] != 0) s += a.c[i] * b.c[j] * a.ctx->get({i, j});
  return s;
}

Rat triple(const DivisorClass& a, const DivisorClass& b, const DivisorClass& c) {
  same_ctx(a, b);
  same_ctx(a, c);
  if (a.ctx->arity() != 3) throw Error(Errc::invalid_argument, "triple product needs a threefold context");
  int n = a.ctx->rank();
  Rat s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (a.c[i] != 0 && b.c[j] != 0 && c.c[k] != 0) s += a.c[i] * b.c[j] * c.c[k] * a.ctx->get({i, j, k});
  return s;
}

ContextPtr k3_context(const Rat& h2, const std::vector<K3Curve>& curves,
                      const std::vector<std::pair<std::pair<std::string, std::string>, Rat>>& extra) {
  std::vector<std::string> names{"H"};
  for (auto& c : curves) names.push_back(c.name);
  auto ctx = std::make_shared<IntersectionContext>(names, 2);
  ctx->set({0, 0}, h2);
  for (std::size_t i = 0; i < curves.size(); ++i) {
    int k = static_cast<int>(i) + 1;
    ctx->set({0, k}, curves[i].degree);
    ctx->set({k, k}, curves[i].self);
  }
  for (auto& [p, v] : extra) ctx->set({ctx->index(p.first), ctx->index(p.second)}, v);
  return ctx;
}

ContextPtr blowup_context(const Rat& h3, const std::vector<BlowupCurve>& curves) {
  auto ctx = std::make_shared<IntersectionContext>(std::vector<std::string>{"H", "E"}, 3);
  Rat he2 = 0, e3 = 0;
  for (auto& c : curves) {
    if (c.genus < 0 || c.degree <= 0) throw Error(Errc::invalid_argument, "curve data must have degree > 0 and genus >= 0");
    he2 -= c.degree;
    e3 += 2 - 2 * c.genus + c.k_dot_c;
  }
  ctx->set({0, 0, 0}, h3);
  ctx->set({0, 0, 1}, 0);
  ctx->set({0, 1, 1}, he2);
  ctx->set({1, 1, 1}, e3);
  return ctx;
}

Rat adjunction_genus(const Rat& self) {
  if (self.get_den() != 1 || self.get_num() % 2 != 0)
    throw Error(Errc::invalid_argument, "self-intersection on a K3 surface must be an even integer");
  return self / 2 + 1;
}

Rat k3_self_from_genus(const Rat& genus) { return 2 * genus - 2; }

CiCurve ci_curve_genus(const std::vector<long>& degrees) {
  if (degrees.size() != 3) throw Error(Errc::invalid_argument, "a curve in P^4 needs three forms");
  long d = 1, s = 0;
  for (long v : degrees) {
    if (v < 1) throw Error(Errc::invalid_argument, "degrees must be positive");
    d *= v;
    s += v;
  }
  long twice = d * (s - 5) + 2;
  return {d, twice / 2};
}

HodgeBound hodge_bound(const Rat& degree, const Rat& h2) {
  if (h2 <= 0) throw Error(Errc::invalid_argument, "H^2 must be positive");
  HodgeBound hb;
  hb.ratio = degree * degree / h2;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), hb.ratio.get_num_mpz_t(), hb.ratio.get_den_mpz_t());
  hb.bound = fl.get_si();
  long s = hb.bound;
  if (Rat(s) == hb.ratio) --s;
  if (s % 2 != 0) --s;
  hb.strict = s;
  return hb;
}

Rat rr_h0_lower(const DivisorClass& D) { return 2 + pair(D, D) / 2; }

Rat det3(const std::vector<std::vector<Rat>>& m) {
  if (m.size() != 3 || m[0].size() != 3 || m[1].size() != 3 || m[2].size() != 3)
    throw Error(Errc::invalid_argument, "det3 needs a 3x3 matrix");
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace {

bool rat_sqrt(const Rat& q, Rat& out) {
  if (q < 0) return false;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  out = Rat(n, d);
  out.canonicalize();
  return true;
}

}  // namespace

DegeneracyResult degeneracy_solve(const Rat& f2, const Rat& degF, const Rat& c2, const Rat& degC, const Rat& h2) {
  if (h2 <= 0) throw Error(Errc::invalid_argument, "H^2 must be positive");
  DegeneracyResult r;
  // expansion of the determinant along the unknown entry
  r.a = -h2;
  r.b = 2 * degF * degC;
  r.c = h2 * f2 * c2 - degF * degF * c2 - degC * degC * f2;
  r.discriminant = r.b * r.b - 4 * r.a * r.c;
  Rat sq;
  if (rat_sqrt(r.discriminant, sq)) {
    std::vector<Rat> xs{(-r.b + sq) / (2 * r.a), (-r.b - sq) / (2 * r.a)};
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (auto& x : xs) {
      DegeneracyRoot root;
      root.rational = true;
      root.value = x;
      root.integer = x.get_den() == 1;
      root.nonnegative = x >= 0;
      root.self_case = x == f2 && x == c2 && degF == degC;
      r.roots.push_back(root);
    }
  } else if (r.discriminant >= 0) {
    r.roots.resize(2);
  }
  return r;
}

RuledCheck ruled_restriction_check(const std::vector<std::pair<long, long>>& candidates) {
  RuledCheck rc;
  auto ctx = std::make_shared<IntersectionContext>(std::vector<std::string>{"s", "f"}, 2);
  ctx->set({0, 0}, 0);
  ctx->set({0, 1}, 1);
  ctx->set({1, 1}, 0);
  ContextPtr E = ctx;
  auto s = generator(E, "s"), f = generator(E, "f");
  // H restricted to E is the pullback of a degree-4 divisor on the base curve.
  DivisorClass twoH = f * Rat(8);
  DivisorClass printed = s - f * Rat(5);
  DivisorClass used = f * Rat(5) - s;
  auto show = [&](const DivisorClass& d) {
    std::string out;
    const char* nm[2] = {"s", "f"};
    for (int i = 0; i < 2; ++i) {
      if (d.c[i] == 0) continue;
      Rat v = d.c[i];
      if (!out.empty()) out += v < 0 ? " - " : " + ";
      else if (v < 0) out += "-";
      v = abs(v);
      if (v != 1) out += v.get_str();
      out += nm[i];
    }
    return out.empty() ? std::string("0") : out;
  };
  DivisorClass res_printed = twoH - printed, res_used = twoH - used;
  rc.restriction_printed = show(res_printed);
  rc.restriction_used = show(res_used);
  rc.e_dot_fibre_printed = pair(printed, f);
  rc.e_dot_fibre_used = pair(used, f);
  rc.e_self = pair(used, used);
  Rat r = 0;
  DivisorClass restricted = res_used * Rat(3) - (s + f) * (2 * r);
  rc.section_bound = pair(s, restricted);
  rc.diagonal_degree = pair(s + f, res_used).get_num().get_si();
  rc.all_excluded = true;
  for (auto [a, b] : candidates) {
    RuledCandidate c;
    c.a = a;
    c.b = b;
    c.degree = pair(s * Rat(a) + f * Rat(b), res_used).get_num().get_si();
    c.within_bound = c.degree <= 17 && a != b;
    // b < b m <= s.(restricted class) forces b below the section bound
    c.excluded = Rat(b) >= rc.section_bound;
    rc.all_excluded = rc.all_excluded && c.excluded;
    rc.candidates.push_back(c);
  }
  return rc;
}

CremonaBookkeeping cremona_bookkeeping(long n, long m) {
  CremonaBookkeeping cb;
  long A[2][2] = {{4, -5}, {3, -4}};
  long sq[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) sq[i][j] = A[i][0] * A[0][j] + A[i][1] * A[1][j];
  cb.involution = sq[0][0] == 1 && sq[0][1] == 0 && sq[1][0] == 0 && sq[1][1] == 1;
  cb.n1 = A[0][0] * n + A[0][1] * m;
  cb.m1 = A[1][0] * n + A[1][1] * m;
  cb.threshold_swap = 2 * A[1][0] - A[0][0] == 2 && 2 * A[1][1] - A[0][1] == -3;
  return cb;
}

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

}  // namespace a5g
