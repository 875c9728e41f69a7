#include "a5geom/linalg.hpp"

namespace a5g {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Cyc(1L);
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat();
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.r_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.c_) throw Error(Errc::invalid_argument, "ragged matrix rows");
    for (int j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Mat::row(int i) const { return Vec(a_.begin() + static_cast<long>(i) * c_, a_.begin() + static_cast<long>(i + 1) * c_); }

Vec Mat::col(int j) const {
  Vec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw Error(Errc::invalid_argument, "matrix shape mismatch");
  Mat m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Cyc& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j)
        if (!o(k, j).is_zero()) m(i, j) += x * o(k, j);
    }
  return m;
}

Vec Mat::operator*(const Vec& v) const {
  if (c_ != static_cast<int>(v.size())) throw Error(Errc::invalid_argument, "matrix-vector shape mismatch");
  Vec out(r_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k)
      if (!(*this)(i, k).is_zero() && !v[k].is_zero()) out[i] += (*this)(i, k) * v[k];
  return out;
}

Mat Mat::transpose() const {
  Mat m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Mat Mat::scaled(const Cyc& s) const {
  Mat m = *this;
  for (auto& x : m.a_) x = x * s;
  return m;
}

bool Mat::is_zero() const {
  for (auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool operator<(const Mat& a, const Mat& b) {
  if (a.r_ != b.r_) return a.r_ < b.r_;
  if (a.c_ != b.c_) return a.c_ < b.c_;
  for (std::size_t i = 0; i < a.a_.size(); ++i) {
    int c = a.a_[i].compare(b.a_[i]);
    if (c) return c < 0;
  }
  return false;
}

namespace {

// Cheapest nonzero pivot in column c at or below row r.
int pick_pivot(const Mat& m, int r, int c) {
  int best = -1;
  std::size_t cost = 0;
  for (int i = r; i < m.rows(); ++i) {
    const Cyc& x = m(i, c);
    if (x.is_zero()) continue;
    std::size_t k = x.nterms() * 64 + x.bits();
    if (best < 0 || k < cost) {
      best = i;
      cost = k;
    }
  }
  return best;
}

void swap_rows(Mat& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

std::vector<int> rref(Mat& m) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = pick_pivot(m, r, c);
    if (p < 0) continue;
    swap_rows(m, r, p);
    Cyc inv = m(r, c).inv();
    for (int j = c; j < m.cols(); ++j)
      if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Cyc f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

int rank(Mat m) {
  // forward elimination only
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = pick_pivot(m, r, c);
    if (p < 0) continue;
    swap_rows(m, r, p);
    Cyc inv = m(r, c).inv();
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      Cyc f = m(i, c) * inv;
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<Vec> nullspace(Mat m) {
  auto piv = rref(m);
  std::vector<char> is_piv(m.cols(), 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(m.cols());
    v[f] = Cyc(1L);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(static_cast<int>(i), f);
    basis.push_back(v);
  }
  return basis;
}

Cyc det(Mat m) {
  if (m.rows() != m.cols()) throw Error(Errc::invalid_argument, "determinant of non-square matrix");
  Cyc d(1L);
  int n = m.rows();
  for (int c = 0; c < n; ++c) {
    int p = pick_pivot(m, c, c);
    if (p < 0) return Cyc();
    if (p != c) {
      swap_rows(m, c, p);
      d = -d;
    }
    d *= m(c, c);
    Cyc inv = m(c, c).inv();
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Cyc f = m(i, c) * inv;
      for (int j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

Mat inverse(const Mat& m) {
  int n = m.rows();
  if (n != m.cols()) throw Error(Errc::not_invertible, "inverse of non-square matrix");
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Cyc(1L);
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw Error(Errc::not_invertible, "matrix is singular");
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  return out;
}

}  // namespace a5g
