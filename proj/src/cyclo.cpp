#include "a5geom/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "a5geom/literal.hpp"

namespace a5g {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::syntax: return "syntax";
    case Errc::root_order: return "root_order";
    case Errc::field_mismatch: return "field_mismatch";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::not_homogeneous: return "not_homogeneous";
    case Errc::not_invertible: return "not_invertible";
    case Errc::bound_exceeded: return "bound_exceeded";
    case Errc::not_on_variety: return "not_on_variety";
    case Errc::smooth_point: return "smooth_point";
    case Errc::degenerate: return "degenerate";
    case Errc::no_solution: return "no_solution";
    case Errc::not_found: return "not_found";
    case Errc::config: return "config";
  }
  return "unknown";
}

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

using IntPoly = std::vector<mpz_class>;

// Exact quotient a / b for monic b.
IntPoly exact_div(IntPoly a, const IntPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  IntPoly q(da - db + 1);
  for (int i = da; i >= db; --i) {
    mpz_class c = a[i];
    q[i - db] = c;
    if (c != 0)
      for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (int i = 0; i < db; ++i)
    if (a[i] != 0) throw Error(Errc::invalid_argument, "cyclotomic division left a remainder");
  return q;
}

}  // namespace

std::vector<mpz_class> cyclotomic_poly(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> memo;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  IntPoly p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = exact_div(p, cyclotomic_poly(d));
  std::lock_guard<std::mutex> lk(mu);
  memo[n] = p;
  return p;
}

Field::Field(int N) : N_(N), phi_(static_cast<int>(euler_phi(N))), phi_poly_(cyclotomic_poly(N)) {
  // Reduce z^k for 0 <= k < N by repeated multiplication by z.
  pow_.resize(N);
  std::vector<mpz_class> cur(phi_);
  cur[0] = 1;
  for (int k = 0; k < N; ++k) {
    auto& row = pow_[k];
    for (int e = 0; e < phi_; ++e) {
      if (cur[e] != 0) {
        if (!cur[e].fits_slong_p()) throw Error(Errc::invalid_argument, "conductor too large");
        row.emplace_back(e, cur[e].get_si());
      }
    }
    // multiply by z
    mpz_class top = cur[phi_ - 1];
    for (int e = phi_ - 1; e > 0; --e) cur[e] = cur[e - 1];
    cur[0] = 0;
    if (top != 0)
      for (int e = 0; e < phi_; ++e) cur[e] -= top * phi_poly_[e];
  }
  // Norm tower over (Z/N)^*.
  std::vector<char> inH(static_cast<std::size_t>(std::max(N, 1)), 0);
  inH[N > 1 ? 1 : 0] = 1;
  for (int k : units()) {
    if (inH[k]) continue;
    int r = 1;
    long kr = k;
    while (!inH[kr]) {
      kr = kr * k % N;
      ++r;
    }
    steps_.emplace_back(k, r);
    std::vector<int> members;
    for (int h = 0; h < N; ++h)
      if (inH[h]) members.push_back(h);
    long kp = 1;
    for (int i = 0; i < r; ++i) {
      for (int h : members) inH[(h * kp) % N] = 1;
      kp = kp * k % N;
    }
  }
}

std::vector<int> Field::units() const {
  std::vector<int> u;
  for (int k = 1; k <= N_; ++k)
    if (std::gcd(k, N_) == 1) u.push_back(k % N_);
  std::sort(u.begin(), u.end());
  return u;
}

const Field* Field::get(int N) {
  if (N < 1) throw Error(Errc::invalid_argument, "conductor must be positive");
  if (N > 5000) throw Error(Errc::invalid_argument, "conductor too large");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> fields;
  std::lock_guard<std::mutex> lk(mu);
  auto& slot = fields[N];
  if (!slot) slot.reset(new Field(N));
  return slot.get();
}

const std::vector<std::pair<int, long>>& Field::power(long k) const {
  long m = k % N_;
  if (m < 0) m += N_;
  return pow_[m];
}

Cyc::Cyc(long v) {
  if (v != 0) t_.emplace_back(0, mpz_class(v));
}

Cyc::Cyc(const mpz_class& v) {
  if (v != 0) t_.emplace_back(0, v);
}

Cyc::Cyc(const mpq_class& v) {
  if (v != 0) {
    t_.emplace_back(0, v.get_num());
    d_ = v.get_den();
  }
}

Cyc Cyc::z(const Field* F, long e) {
  Cyc r;
  r.F_ = F;
  for (auto& [ex, c] : F->power(e)) r.t_.emplace_back(ex, mpz_class(c));
  return r;
}

Cyc Cyc::zeta(const Field* F, long k, long e) {
  if (k < 1 || F->conductor() % k != 0)
    throw Error(Errc::root_order,
                "root order " + std::to_string(k) + " does not divide conductor " +
                    std::to_string(F->conductor()));
  long m = F->conductor() / k;
  long ex = (e % k) * m;
  return z(F, ex);
}

Cyc Cyc::in(const Field* F) const {
  if (F_ && F_ != F) throw Error(Errc::field_mismatch, "element belongs to another field");
  Cyc r = *this;
  r.F_ = F;
  return r;
}

bool Cyc::is_one() const { return t_.size() == 1 && t_[0].first == 0 && t_[0].second == 1 && d_ == 1; }

mpq_class Cyc::rational() const {
  if (!is_rational()) throw Error(Errc::invalid_argument, "element is not rational");
  if (t_.empty()) return 0;
  mpq_class q(t_[0].second, d_);
  q.canonicalize();
  return q;
}

mpq_class Cyc::coeff(int e) const {
  for (auto& [ex, c] : t_)
    if (ex == e) {
      mpq_class q(c, d_);
      q.canonicalize();
      return q;
    }
  return 0;
}

std::size_t Cyc::bits() const {
  std::size_t b = mpz_sizeinbase(d_.get_mpz_t(), 2);
  for (auto& [e, c] : t_) b += mpz_sizeinbase(c.get_mpz_t(), 2);
  return b;
}

void Cyc::normalize() {
  t_.erase(std::remove_if(t_.begin(), t_.end(), [](const auto& p) { return p.second == 0; }),
           t_.end());
  if (t_.empty()) {
    d_ = 1;
    return;
  }
  if (d_ < 0) {
    d_ = -d_;
    for (auto& p : t_) p.second = -p.second;
  }
  if (d_ == 1) return;
  mpz_class g = d_;
  for (auto& p : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.second.get_mpz_t());
    if (g == 1) return;
  }
  d_ /= g;
  for (auto& p : t_) mpz_divexact(p.second.get_mpz_t(), p.second.get_mpz_t(), g.get_mpz_t());
}

const Field* Cyc::join(const Cyc& a, const Cyc& b) {
  if (a.F_ && b.F_ && a.F_ != b.F_)
    throw Error(Errc::field_mismatch, "operands belong to different fields");
  return a.F_ ? a.F_ : b.F_;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& p : r.t_) p.second = -p.second;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  F_ = join(*this, o);
  if (o.t_.empty()) return *this;
  if (t_.empty()) {
    t_ = o.t_;
    d_ = o.d_;
    return *this;
  }
  mpz_class fa = 1, fb = 1;
  if (d_ != o.d_) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), d_.get_mpz_t(), o.d_.get_mpz_t());
    fa = l / d_;
    fb = l / o.d_;
    d_ = l;
  }
  std::vector<std::pair<int, mpz_class>> out;
  out.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) {
      out.emplace_back(t_[i].first, t_[i].second * fa);
      ++i;
    } else if (i == t_.size() || o.t_[j].first < t_[i].first) {
      out.emplace_back(o.t_[j].first, o.t_[j].second * fb);
      ++j;
    } else {
      mpz_class c = t_[i].second * fa + o.t_[j].second * fb;
      if (c != 0) out.emplace_back(t_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  t_ = std::move(out);
  normalize();
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) { return *this += -o; }

Cyc operator*(const Cyc& a, const Cyc& b) {
  Cyc r;
  r.F_ = Cyc::join(a, b);
  if (a.t_.empty() || b.t_.empty()) return r;
  if (a.is_rational() || b.is_rational()) {
    const Cyc& s = a.is_rational() ? a : b;
    const Cyc& v = a.is_rational() ? b : a;
    r.t_ = v.t_;
    for (auto& p : r.t_) p.second *= s.t_[0].second;
    r.d_ = v.d_ * s.d_;
    r.normalize();
    return r;
  }
  const Field* F = r.F_;
  int phi = F->degree();
  std::vector<mpz_class> acc(2 * phi);
  for (auto& [ea, ca] : a.t_)
    for (auto& [eb, cb] : b.t_) mpz_addmul(acc[ea + eb].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  for (int k = 2 * phi - 1; k >= phi; --k) {
    if (acc[k] == 0) continue;
    for (auto& [e, c] : F->power(k)) {
      if (c > 0) mpz_addmul_ui(acc[e].get_mpz_t(), acc[k].get_mpz_t(), static_cast<unsigned long>(c));
      else mpz_submul_ui(acc[e].get_mpz_t(), acc[k].get_mpz_t(), static_cast<unsigned long>(-c));
    }
  }
  for (int e = 0; e < phi; ++e)
    if (acc[e] != 0) r.t_.emplace_back(e, std::move(acc[e]));
  r.d_ = a.d_ * b.d_;
  r.normalize();
  return r;
}

Cyc& Cyc::operator*=(const Cyc& o) { return *this = *this * o; }

Cyc& Cyc::operator/=(const Cyc& o) { return *this = *this * o.inv(); }

Cyc Cyc::galois(long k) const {
  if (!F_ || is_rational()) return *this;
  long N = F_->conductor();
  long kk = ((k % N) + N) % N;
  if (std::gcd(kk, N) != 1) throw Error(Errc::invalid_argument, "Galois exponent not coprime to conductor");
  std::vector<mpz_class> acc(F_->degree());
  for (auto& [e, c] : t_)
    for (auto& [ex, cc] : F_->power(static_cast<long>(e) * kk)) {
      if (cc > 0) mpz_addmul_ui(acc[ex].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(cc));
      else mpz_submul_ui(acc[ex].get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-cc));
    }
  Cyc r;
  r.F_ = F_;
  for (int e = 0; e < F_->degree(); ++e)
    if (acc[e] != 0) r.t_.emplace_back(e, std::move(acc[e]));
  r.d_ = d_;
  r.normalize();
  return r;
}

Cyc Cyc::inv() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  if (is_rational()) {
    Cyc r;
    r.F_ = F_;
    r.t_.emplace_back(0, d_);
    r.d_ = t_[0].second;
    r.normalize();
    return r;
  }
  if (t_.size() == 1) {
    // c z^e -> z^(N-e) / c
    Cyc r = z(F_, F_->conductor() - t_[0].first);
    Cyc s;
    s.t_.emplace_back(0, d_);
    s.d_ = t_[0].second;
    s.normalize();
    return r * s;
  }
  // Multiply by conjugates up the norm tower until the product is rational.
  Cyc b = *this;
  Cyc cof(1);
  cof.F_ = F_;
  for (auto [k, r] : F_->norm_steps()) {
    if (b.is_rational()) break;
    Cyc t(1), s = b;
    for (int i = 1; i < r; ++i) {
      s = s.galois(k);
      t = t * s;
    }
    cof = cof * t;
    b = b * t;
  }
  if (!b.is_rational()) throw Error(Errc::invalid_argument, "norm tower did not terminate");
  Cyc ib;
  ib.t_.emplace_back(0, b.d_);
  ib.d_ = b.t_[0].second;
  ib.normalize();
  return cof * ib;
}

Cyc Cyc::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Cyc r(1), b = *this;
  r.F_ = F_;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::complex<double> Cyc::embed(long k) const {
  std::complex<double> s = 0;
  if (t_.empty()) return s;
  long N = F_ ? F_->conductor() : 1;
  for (auto& [e, c] : t_) {
    mpq_class q(c, d_);
    q.canonicalize();
    double ang = 2.0 * M_PI * static_cast<double>((static_cast<long>(e) * k) % N) / static_cast<double>(N);
    s += q.get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

int Cyc::compare(const Cyc& o) const {
  if (t_.size() != o.t_.size()) return t_.size() < o.t_.size() ? -1 : 1;
  int dc = cmp(d_, o.d_);
  if (dc) return dc < 0 ? -1 : 1;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (t_[i].first != o.t_[i].first) return t_[i].first < o.t_[i].first ? -1 : 1;
    int c = cmp(t_[i].second, o.t_[i].second);
    if (c) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::size_t Cyc::hash() const {
  std::size_t h = std::hash<long>()(mpz_get_si(d_.get_mpz_t()));
  for (auto& [e, c] : t_) {
    h ^= std::hash<long>()(e * 1000003L + mpz_get_si(c.get_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Cyc::str() const { return render(*this); }

std::string render(const Cyc& a) {
  if (a.is_zero()) return "0";
  long N = a.field() ? a.field()->conductor() : 1;
  std::string out;
  bool first = true;
  for (auto& [e, c] : a.terms()) {
    mpq_class q(c, a.den());
    q.canonicalize();
    bool neg = q < 0;
    if (neg) q = -q;
    std::string sym;
    if (e != 0) {
      long g = std::gcd(static_cast<long>(e), N);
      long k = N / g, m = e / g;
      sym = "z" + std::to_string(k);
      if (m != 1) sym += "^" + std::to_string(m);
    }
    std::string body;
    if (sym.empty()) body = q.get_str();
    else if (q == 1) body = sym;
    else body = q.get_str() + "*" + sym;
    if (first) out += neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

namespace {

struct CycOps {
  using value_type = Cyc;
  const Field* F;
  const CycEnv* env;
  Cyc integer(const mpz_class& v) const { return Cyc(v).in(F); }
  bool symbol(const std::string& name, Cyc& out) const {
    if (env) {
      auto it = env->find(name);
      if (it != env->end()) {
        out = it->second.in(F);
        return true;
      }
    }
    if (name.size() < 2 || name[0] != 'z') return false;
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    if (name.size() > 8) throw Error(Errc::root_order, "root order too large: " + name);
    out = Cyc::zeta(F, std::stol(name.substr(1)));
    return true;
  }
  Cyc add(const Cyc& a, const Cyc& b) const { return a + b; }
  Cyc sub(const Cyc& a, const Cyc& b) const { return a - b; }
  Cyc mul(const Cyc& a, const Cyc& b) const { return a * b; }
  Cyc div(const Cyc& a, const Cyc& b) const { return a / b; }
  Cyc neg(const Cyc& a) const { return -a; }
  Cyc pow(const Cyc& a, long e) const { return a.pow(e); }
};

}  // namespace

Cyc parse_cyc(const std::string& text, const Field* F, const CycEnv* env) {
  CycOps ops{F, env};
  return LiteralParser<CycOps>(text, ops).parse().in(F);
}

int conductor_of(const Cyc& a) {
  if (a.is_rational() || !a.field()) return 1;
  const Field* F = a.field();
  int N = F->conductor();
  auto units = F->units();
  for (int m = 1; m <= N; ++m) {
    if (N % m != 0) continue;
    if (m % 4 == 2) continue;
    bool fixed = true;
    for (int k : units) {
      if (k % m != 1 % m) continue;
      if (k == 1) continue;
      if (a.galois(k) != a) {
        fixed = false;
        break;
      }
    }
    if (fixed) return m;
  }
  return N;
}

}  // namespace a5g
