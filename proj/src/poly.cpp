#include "a5geom/poly.hpp"

#include <algorithm>

#include "a5geom/literal.hpp"

namespace a5g {

namespace {
constexpr int kBits = 10;
constexpr MonoKey kMask = (MonoKey(1) << kBits) - 1;
}  // namespace

MonoKey pack(const Exps& e) {
  MonoKey k = 0;
  int d = 0;
  for (int v : e) {
    if (v < 0 || v > 200) throw Error(Errc::invalid_argument, "exponent out of range");
    d += v;
  }
  k = MonoKey(d);
  for (int v : e) k = (k << kBits) | MonoKey(v);
  return k;
}

Exps unpack(MonoKey k) {
  Exps e{};
  for (int i = kVars - 1; i >= 0; --i) {
    e[i] = static_cast<int>(k & kMask);
    k >>= kBits;
  }
  return e;
}

int key_degree(MonoKey k) { return static_cast<int>(k >> (kBits * kVars)); }

Poly::Poly(const Cyc& c) {
  if (!c.is_zero()) t_.emplace(pack({0, 0, 0, 0, 0}), c);
}

Poly Poly::var(int i) {
  if (i < 0 || i >= kVars) throw Error(Errc::invalid_argument, "variable index out of range");
  Exps e{};
  e[i] = 1;
  return monomial(e);
}

Poly Poly::monomial(const Exps& e, const Cyc& c) {
  Poly p;
  if (!c.is_zero()) p.t_.emplace(pack(e), c);
  return p;
}

int Poly::degree() const {
  if (t_.empty()) return -1;
  return key_degree(t_.rbegin()->first);
}

int Poly::homogeneous_degree() const {
  if (t_.empty()) return -1;
  int d = key_degree(t_.begin()->first);
  return d == key_degree(t_.rbegin()->first) ? d : -1;
}

Cyc Poly::coeff(const Exps& e) const {
  auto it = t_.find(pack(e));
  return it == t_.end() ? Cyc() : it->second;
}

MonoKey Poly::leading_key() const {
  if (t_.empty()) throw Error(Errc::invalid_argument, "leading term of zero polynomial");
  return t_.rbegin()->first;
}

const Cyc& Poly::leading_coeff() const {
  if (t_.empty()) throw Error(Errc::invalid_argument, "leading term of zero polynomial");
  return t_.rbegin()->second;
}

void Poly::add_term(MonoKey k, const Cyc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (auto& [ka, ca] : t_)
    for (auto& [kb, cb] : o.t_) r.add_term(ka + kb, ca * cb);
  return r;
}

Poly Poly::operator*(const Cyc& c) const {
  Poly r;
  if (c.is_zero()) return r;
  for (auto& [k, v] : t_) r.t_.emplace_hint(r.t_.end(), k, v * c);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw Error(Errc::invalid_argument, "negative power of a polynomial");
  Poly r(Cyc(1L)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly Poly::diff(int i) const {
  if (i < 0 || i >= kVars) throw Error(Errc::invalid_argument, "variable index out of range");
  Poly r;
  for (auto& [k, c] : t_) {
    Exps e = unpack(k);
    if (e[i] == 0) continue;
    long m = e[i];
    e[i] -= 1;
    r.add_term(pack(e), c * Cyc(m));
  }
  return r;
}

Cyc Poly::eval(const Vec& pt) const {
  if (pt.size() != kVars) throw Error(Errc::invalid_argument, "point must have 5 coordinates");
  std::array<Cyc, kVars> x;
  for (int i = 0; i < kVars; ++i) x[i] = pt[i];
  return eval_generic<Cyc>(*this, x, Cyc(), Cyc(1L), [](const Cyc& c, const Cyc& m) { return c * m; });
}

Poly Poly::substitute(const std::array<Poly, kVars>& images) const {
  int d = -2;
  for (auto& q : images) {
    int h = q.is_zero() ? d : q.homogeneous_degree();
    if (q.is_zero()) continue;
    if (h < 0 || (d != -2 && h != d))
      throw Error(Errc::not_homogeneous, "substitution images must be homogeneous of one degree");
    d = h;
  }
  return eval_generic<Poly>(*this, images, Poly(), Poly(Cyc(1L)), [](const Cyc& c, const Poly& m) { return m * c; });
}

Poly Poly::compose_linear(const Mat& A) const {
  if (A.rows() != kVars || A.cols() != kVars) throw Error(Errc::invalid_argument, "linear map must be 5x5");
  std::array<Poly, kVars> img;
  for (int i = 0; i < kVars; ++i)
    for (int j = 0; j < kVars; ++j)
      if (!A(i, j).is_zero()) img[i] += var(j) * A(i, j);
  return substitute(img);
}

Poly Poly::galois(long k) const {
  Poly r;
  for (auto& [key, c] : t_) r.add_term(key, c.galois(k));
  return r;
}

std::string Poly::str() const { return render(*this); }

std::string render(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Exps e = unpack(it->first);
    std::string mono;
    for (int i = 0; i < kVars; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const Cyc& c = it->second;
    bool neg = false;
    std::string cs;
    if (c.is_rational()) {
      mpq_class q = c.rational();
      neg = q < 0;
      if (neg) q = -q;
      cs = q.get_str();
      if (q == 1 && !mono.empty()) cs.clear();
    } else if (c.nterms() == 1 && !mono.empty()) {
      std::string r = render(c);
      neg = r[0] == '-';
      cs = neg ? r.substr(1) : r;
    } else {
      cs = "(" + render(c) + ")";
    }
    std::string body = cs.empty() ? mono : (mono.empty() ? cs : cs + "*" + mono);
    if (first) out += neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

namespace {

struct PolyOps {
  using value_type = Poly;
  const Field* F;
  const PolyEnv* env;
  Poly integer(const mpz_class& v) const { return Poly(Cyc(v).in(F)); }
  bool symbol(const std::string& name, Poly& out) const {
    if (env) {
      auto it = env->find(name);
      if (it != env->end()) {
        out = it->second;
        return true;
      }
    }
    if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '5') {
      out = Poly::var(name[1] - '1');
      return true;
    }
    if (name.size() >= 2 && name[0] == 'z') {
      for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
      if (name.size() > 8) throw Error(Errc::root_order, "root order too large: " + name);
      out = Poly(Cyc::zeta(F, std::stol(name.substr(1))));
      return true;
    }
    return false;
  }
  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly mul(const Poly& a, const Poly& b) const { return a * b; }
  Poly div(const Poly& a, const Poly& b) const {
    if (b.degree() != 0) throw Error(Errc::syntax, "division by a non-constant polynomial");
    return a * b.terms().begin()->second.inv();
  }
  Poly neg(const Poly& a) const { return -a; }
  Poly pow(const Poly& a, long e) const {
    if (a.degree() == 0) return Poly(a.terms().begin()->second.pow(e));
    if (e < 0) throw Error(Errc::syntax, "negative power of a polynomial");
    return a.pow(static_cast<int>(e));
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const Field* F, const PolyEnv* env) {
  PolyOps ops{F, env};
  Poly p = LiteralParser<PolyOps>(text, ops).parse();
  Poly r;
  for (auto& [k, c] : p.terms()) r += Poly::monomial(unpack(k), c.in(F));
  return r;
}

Poly reduce_by(const Poly& p, const Poly& d) {
  if (d.is_zero()) throw Error(Errc::invalid_argument, "reduction by the zero polynomial");
  MonoKey lk = d.leading_key();
  Exps le = unpack(lk);
  Cyc linv = d.leading_coeff().inv();
  Poly rem;
  Poly work = p;
  while (!work.is_zero()) {
    auto it = work.terms().rbegin();
    MonoKey k = it->first;
    Cyc c = it->second;
    Exps e = unpack(k);
    bool divisible = true;
    for (int i = 0; i < kVars; ++i)
      if (e[i] < le[i]) divisible = false;
    if (divisible) {
      Exps q;
      for (int i = 0; i < kVars; ++i) q[i] = e[i] - le[i];
      work -= d * Poly::monomial(q, c * linv);
    } else {
      rem += Poly::monomial(e, c);
      work -= Poly::monomial(e, c);
    }
  }
  return rem;
}

std::vector<Exps> monomials_of_degree(int d) {
  std::vector<Exps> out;
  Exps e{};
  for (e[0] = d; e[0] >= 0; --e[0])
    for (e[1] = d - e[0]; e[1] >= 0; --e[1])
      for (e[2] = d - e[0] - e[1]; e[2] >= 0; --e[2])
        for (e[3] = d - e[0] - e[1] - e[2]; e[3] >= 0; --e[3]) {
          e[4] = d - e[0] - e[1] - e[2] - e[3];
          out.push_back(e);
        }
  return out;
}

}  // namespace a5g
