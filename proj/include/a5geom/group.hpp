#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "a5geom/linalg.hpp"
#include "a5geom/poly.hpp"

namespace a5g {

// Scale so the first nonzero coordinate is 1.  Throws on the zero vector.
Vec normalize_point(Vec p);
// Scale so the first nonzero entry (row-major) is 1.
Mat normalize_matrix(Mat m);

// Finite subgroup of PGL_5, fully enumerated.  elems[0] is the identity.
class Group {
 public:
  const Field* field() const { return F_; }
  int order() const { return static_cast<int>(elems_.size()); }
  const Mat& elem(int i) const { return elems_[i]; }
  // Finite-order linear representative of element i.
  const Mat& lift(int i) const { return lifts_[i]; }
  const std::vector<int>& gens() const { return gens_; }
  const std::vector<Mat>& gen_matrices() const { return gen_mats_; }
  // Perfect core of the linear group generated by the generator matrices.
  const std::vector<Mat>& core() const { return core_; }

  int index_of(const Mat& m) const;  // m need not be normalized; -1 if absent
  int mul(int a, int b) const;
  int inv(int a) const;
  int elem_order(int a) const;
  std::map<int, int> census() const;
  Vec act(int g, const Vec& p) const;

  friend Group enumerate_group(const std::vector<Mat>& gens, std::size_t bound);

 private:
  const Field* F_ = nullptr;
  std::vector<Mat> elems_, lifts_, core_, gen_mats_;
  std::vector<int> gens_;
  std::map<Mat, int> index_;
  struct Memo {
    std::mutex mu;
    std::vector<int> table;
  };
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

Group enumerate_group(const std::vector<Mat>& gens, std::size_t bound = 10000);

// Element indices of the subgroup generated by the given elements; stops
// early (returning the partial set) once more than `cap` elements are found.
std::vector<int> subgroup_closure(const Group& G, const std::vector<int>& gens, std::size_t cap = 1u << 30);

struct PointOrbit {
  std::vector<Vec> points;  // sorted, normalized
  int group_order = 0;
  std::size_t length() const { return points.size(); }
  const Vec& rep() const { return points.front(); }
  bool contains(const Vec& p) const;
};

PointOrbit orbit_of(const Vec& p, const Group& G);
std::vector<int> stabilizer(const Vec& p, const Group& G);

std::vector<Poly> invariant_forms(const Group& G, int d);

struct Invariance {
  bool invariant = false;
  std::vector<Cyc> scalars;  // one per generator matrix
};
Invariance is_invariant(const Poly& F, const Group& G);

struct Subspace {
  std::vector<Vec> basis;   // row-reduced
  std::vector<Cyc> character;  // eigenvalue of each generator lift
  int proj_dim() const { return static_cast<int>(basis.size()) - 1; }
};
// Joint eigenspaces of the lifts of the given elements.
std::vector<Subspace> fixed_locus(const Group& G, const std::vector<int>& sub_gens);

struct OrbitScan {
  std::vector<PointOrbit> orbits;    // sorted by (length, rep)
  std::vector<std::string> notes;    // families and roots outside the field
  // Fixed subspaces (lines, planes, ...) meeting X in positive dimension.
  std::vector<std::vector<Vec>> families;
  bool complete = true;
};
OrbitScan small_orbits_on(const Group& G, const Poly& X, int max_len);

// Restriction of a form to the line {s*u + t*v}: coefficient i is that of s^(d-i) t^i.
std::vector<Cyc> restrict_to_line(const Poly& F, const Vec& u, const Vec& v);

}  // namespace a5g
