#pragma once

#include <vector>

#include "a5geom/cyclo.hpp"

namespace a5g {

using Vec = std::vector<Cyc>;

// Dense row-major matrix over the cyclotomic field.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static Mat identity(int n);
  static Mat from_rows(const std::vector<Vec>& rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Cyc& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const Cyc& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  Vec row(int i) const;
  Vec col(int j) const;

  Mat operator*(const Mat& o) const;
  Vec operator*(const Vec& v) const;
  Mat transpose() const;
  Mat scaled(const Cyc& s) const;
  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
  friend bool operator<(const Mat& a, const Mat& b);

 private:
  int r_ = 0, c_ = 0;
  std::vector<Cyc> a_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m);
int rank(Mat m);
// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(Mat m);
Cyc det(Mat m);
// Throws Errc::not_invertible for singular input.
Mat inverse(const Mat& m);

}  // namespace a5g
