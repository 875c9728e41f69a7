#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>

#include "a5geom/cyclo.hpp"

namespace a5g {

namespace {

using cd = std::complex<double>;
using UPoly = std::vector<Cyc>;  // lowest degree first

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Cyc(static_cast<long>(i)));
  trim(d);
  return d;
}

// Division with remainder; b nonzero.
void divmod(UPoly a, const UPoly& b, UPoly& q, UPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Cyc());
  Cyc lead_inv = b.back().inv();
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t sh = a.size() - b.size();
    Cyc c = a.back() * lead_inv;
    q[sh] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  r = a;
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = b;
    b = r;
  }
  return a;
}

Cyc eval(const UPoly& p, const Cyc& x) {
  Cyc v;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

std::vector<cd> complex_roots(const std::vector<cd>& c) {
  int n = static_cast<int>(c.size()) - 1;
  std::vector<cd> a(c.size());
  for (int i = 0; i <= n; ++i) a[i] = c[i] / c[n];
  double bound = 1;
  for (int i = 0; i < n; ++i) bound = std::max(bound, 1 + std::abs(a[i]));
  std::vector<cd> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::polar(bound * 0.9, 2 * M_PI * i / n + 0.4);
  auto f = [&](cd x) {
    cd v = 0;
    for (int i = n; i >= 0; --i) v = v * x + a[i];
    return v;
  };
  auto df = [&](cd x) {
    cd v = 0;
    for (int i = n; i >= 1; --i) v = v * x + a[i] * double(i);
    return v;
  };
  for (int it = 0; it < 500; ++it) {
    double delta = 0;
    for (int i = 0; i < n; ++i) {
      cd den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      cd step = f(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-15 * bound) break;
  }
  for (auto& x : z)
    for (int k = 0; k < 3; ++k) {
      cd d = df(x);
      if (std::abs(d) > 0) x -= f(x) / d;
    }
  return z;
}

bool approx_rational(double x, mpq_class& out) {
  if (!std::isfinite(x)) return false;
  double ax = std::fabs(x);
  double tol = 1e-7 * std::max(1.0, ax);
  // continued fraction convergents
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = ax;
  for (int it = 0; it < 40; ++it) {
    double fl = std::floor(r);
    if (fl > 1e15) return false;
    long long a = static_cast<long long>(fl);
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > 1000000) return false;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (std::fabs(ax - static_cast<double>(p1) / static_cast<double>(q1)) < tol) {
      out = mpq_class(mpz_class(std::to_string(p1)), mpz_class(std::to_string(q1)));
      out.canonicalize();
      if (x < 0) out = -out;
      return true;
    }
    double frac = r - fl;
    if (frac < 1e-300) return false;
    r = 1 / frac;
  }
  return false;
}

std::vector<cd> invert(std::vector<std::vector<cd>> m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<cd>> inv(n, std::vector<cd>(n));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    cd d = m[c][c];
    for (int j = 0; j < n; ++j) {
      m[c][j] /= d;
      inv[c][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      cd f = m[r][c];
      if (f == cd(0)) continue;
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  std::vector<cd> flat;
  for (auto& row : inv) flat.insert(flat.end(), row.begin(), row.end());
  return flat;
}

// Search Q(zeta_m) inside F for a root of p; combinations of numeric roots
// across the embeddings are capped at `cap`.
bool search_level(const UPoly& p, const Field* F, int m, long cap, Cyc& root) {
  int N = F->conductor();
  int deg = static_cast<int>(p.size()) - 1;
  std::vector<int> ks;
  if (m <= 2) ks.push_back(1);
  else
    for (int k = 1; k < m; ++k)
      if (std::gcd(k, m) == 1) ks.push_back(k);
  int d = static_cast<int>(ks.size());
  auto lift = [&](int k) {
    for (long t = k;; t += m)
      if (std::gcd(t, static_cast<long>(N)) == 1) return t;
  };
  // Embedding reps: one per complex-conjugate pair.
  std::vector<int> reps;
  for (int k : ks)
    if (m <= 2 || k < m - k) reps.push_back(k);
  long combos = 1;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    combos *= deg;
    if (combos > cap) return false;
  }
  std::vector<std::vector<cd>> V(d, std::vector<cd>(d));
  for (int r = 0; r < d; ++r)
    for (int j = 0; j < d; ++j) V[r][j] = std::polar(1.0, 2 * M_PI * double((long)ks[r] * j % std::max(m, 1)) / std::max(m, 1));
  auto W = invert(V);
  auto idx = [&](int k) { return static_cast<int>(std::find(ks.begin(), ks.end(), k) - ks.begin()); };
  // contribution vectors
  std::vector<std::vector<std::vector<cd>>> u(reps.size());
  for (std::size_t pi = 0; pi < reps.size(); ++pi) {
    int k = reps[pi];
    long kl = lift(k);
    std::vector<cd> coeffs;
    for (auto& c : p) coeffs.push_back(c.embed(kl));
    auto rts = complex_roots(coeffs);
    for (auto& r : rts) {
      std::vector<cd> vec(d);
      int a = idx(k);
      for (int j = 0; j < d; ++j) vec[j] = W[j * d + a] * r;
      if (m > 2) {
        int b = idx(m - k);
        for (int j = 0; j < d; ++j) vec[j] += W[j * d + b] * std::conj(r);
      }
      u[pi].push_back(vec);
    }
  }
  std::vector<Cyc> basis;
  for (int j = 0; j < d; ++j) basis.push_back(m <= 2 ? Cyc(j == 0 ? 1L : 0L).in(F) : Cyc::zeta(F, m, j));
  std::vector<int> choice(reps.size(), 0);
  for (long it = 0; it < combos; ++it) {
    std::vector<cd> c(d, 0);
    for (std::size_t pi = 0; pi < reps.size(); ++pi)
      for (int j = 0; j < d; ++j) c[j] += u[pi][choice[pi]][j];
    bool ok = true;
    Cyc cand = Cyc().in(F);
    for (int j = 0; j < d && ok; ++j) {
      double scale = std::max(1.0, std::abs(c[j]));
      if (std::fabs(c[j].imag()) > 1e-6 * scale) {
        ok = false;
        break;
      }
      mpq_class q;
      if (!approx_rational(c[j].real(), q)) ok = false;
      else if (q != 0) cand += basis[j] * Cyc(q);
    }
    if (ok && eval(p, cand).is_zero()) {
      root = cand;
      return true;
    }
    for (std::size_t pi = 0; pi < reps.size(); ++pi) {
      if (++choice[pi] < deg) break;
      choice[pi] = 0;
    }
  }
  return false;
}

std::vector<int> levels_above(const Field* F, int base) {
  int N = F->conductor();
  std::vector<int> ms;
  for (int m = 1; m <= N; ++m)
    if (N % m == 0 && m % base == 0 && m % 4 != 2) ms.push_back(m);
  std::stable_sort(ms.begin(), ms.end(), [](int a, int b) { return euler_phi(a) < euler_phi(b); });
  return ms;
}

bool is_pow2(long v) { return v > 0 && (v & (v - 1)) == 0; }

using u64 = unsigned long long;

u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  for (; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Primes p = 1 mod N below 2^31 with an element of order exactly N.
struct SplitPrime {
  u64 p, zeta;
};

std::vector<SplitPrime> split_primes(int N, int count) {
  std::vector<int> qs;
  for (int n = N, q = 2; n > 1; ++q)
    if (n % q == 0) {
      qs.push_back(q);
      while (n % q == 0) n /= q;
    }
  std::vector<SplitPrime> out;
  for (u64 p = (u64(1) << 30) / N * N + 1; out.size() < static_cast<std::size_t>(count); p += N) {
    bool prime = p > 2;
    for (u64 d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (!prime) continue;
    for (u64 x = 2; x < p; ++x) {
      u64 h = powmod(x, (p - 1) / N, p);
      bool full = true;
      for (int q : qs) full = full && powmod(h, N / q, p) != 1;
      if (full) {
        out.push_back({p, h});
        break;
      }
    }
  }
  return out;
}

// True when some reduction of a modulo a degree-one prime is a non-residue,
// which rules out a square root in F.
bool certainly_nonsquare(const Cyc& a, const Field* F) {
  static std::mutex mu;
  static std::map<int, std::vector<SplitPrime>> cache;
  std::vector<SplitPrime> primes;
  {
    std::lock_guard<std::mutex> lk(mu);
    auto& v = cache[F->conductor()];
    if (v.empty()) v = split_primes(F->conductor(), 12);
    primes = v;
  }
  for (auto& [p, zeta] : primes) {
    mpz_class pz(static_cast<unsigned long>(p));
    if (mpz_divisible_p(a.den().get_mpz_t(), pz.get_mpz_t())) continue;
    // several embeddings zeta -> zeta^k
    for (u64 k : {1ull, 7ull, 11ull, 13ull}) {
      if (std::gcd(k, static_cast<u64>(F->conductor())) != 1) continue;
      u64 z = powmod(zeta, k, p), v = 0;
      for (auto& [e, c] : a.terms()) {
        mpz_class r = c % pz;
        if (r < 0) r += pz;
        v = (v + r.get_ui() * powmod(z, static_cast<u64>(e), p)) % p;
      }
      mpz_class dr = a.den() % pz;
      v = v * dr.get_ui() % p;  // a square iff a * den^2 is
      if (v != 0 && powmod(v, (p - 1) / 2, p) != 1) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Cyc> upoly_gcd(const std::vector<Cyc>& a, const std::vector<Cyc>& b) { return gcd(a, b); }

bool cyc_sqrt(const Cyc& a, const Field* F, Cyc& out) {
  if (a.is_zero()) {
    out = Cyc().in(F);
    return true;
  }
  if (a.is_rational()) {
    mpq_class q = a.rational();
    if (q > 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
      mpz_class n, d;
      mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
      mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
      out = Cyc(mpq_class(n, d)).in(F);
      return true;
    }
  }
  if (certainly_nonsquare(a.in(F), F)) return false;
  UPoly p{-a, Cyc(0L), Cyc(1L)};
  for (auto& c : p) c = c.in(F);
  for (int m : levels_above(F, conductor_of(a.in(F)))) {
    Cyc r;
    if (search_level(p, F, m, 1L << 17, r)) {
      out = r;
      return true;
    }
  }
  return false;
}

std::vector<Cyc> field_roots(const std::vector<Cyc>& fin, const Field* F, bool* complete, int* distinct) {
  if (complete) *complete = true;
  if (distinct) *distinct = 0;
  UPoly f = fin;
  for (auto& c : f) c = c.in(F);
  trim(f);
  std::vector<Cyc> roots;
  if (f.size() <= 1) return roots;
  // square-free part
  UPoly g = gcd(f, derivative(f));
  if (g.size() > 1) {
    UPoly q, r;
    divmod(f, g, q, r);
    f = q;
  }
  if (distinct) *distinct = static_cast<int>(f.size()) - 1;
  while (f.size() > 1) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg == 1) {
      roots.push_back(-f[0] / f[1]);
      break;
    }
    if (deg == 2) {
      Cyc disc = f[1] * f[1] - Cyc(4L) * f[0] * f[2];
      Cyc s;
      if (cyc_sqrt(disc, F, s)) {
        Cyc den = (Cyc(2L) * f[2]).inv();
        roots.push_back((-f[1] + s) * den);
        if (!s.is_zero()) roots.push_back((-f[1] - s) * den);
      }
      break;
    }
    int m = 1;
    for (auto& c : f) m = std::lcm(m, conductor_of(c));
    Cyc r;
    bool found = search_level(f, F, m, 200000, r);
    if (!found) {
      long index = F->degree() / euler_phi(m);
      bool certain = deg == 3 && is_pow2(index);
      if (!certain && m != F->conductor()) found = search_level(f, F, F->conductor(), 200000, r);
      if (!found) {
        if (!certain && complete) *complete = false;
        break;
      }
    }
    roots.push_back(r);
    UPoly q, rem;
    divmod(f, UPoly{-r, Cyc(1L).in(F)}, q, rem);
    f = q;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace a5g
