#pragma once

#include <array>
#include <vector>

#include "a5geom/group.hpp"
#include "a5geom/poly.hpp"

namespace a5g {

// Standard Cremona map centred at five points in general position.
// Adapted coordinates y = M x put the points at the coordinate points;
// there the map is y_i -> prod_{j != i} y_j.
struct CremonaMap {
  Mat P;  // columns: the five points, normalized
  Mat M;  // sends the points to coordinate points; rows normalized to leading 1
  Mat Minv;
  std::array<Poly, kVars> forms;  // the map in source coordinates, degree 4
};

CremonaMap build_cremona(const std::vector<Vec>& points);

// X(M^-1 y): the quadric in adapted coordinates.
Poly adapted_form(const CremonaMap& chi, const Poly& X);

struct CremonaImage {
  Poly target;      // cubic in adapted target coordinates
  Poly source;      // the same cubic moved back by the polarity of X
  int solution_dim = 0;
};
// Cubic G with G(sigma(y)) divisible by X(M^-1 y); the solution space must be a line.
CremonaImage image_cubic(const CremonaMap& chi, const Poly& X);

struct Equivariance {
  bool ok = false;
  std::vector<Mat> target_action;  // monomial matrices, one per generator
  std::vector<Cyc> scalars;
};
// The generators, conjugated into adapted coordinates and pushed through the map,
// act monomially and preserve the image cubic.
Equivariance conjugated_group(const CremonaMap& chi, const Group& G, const Poly& target_cubic);

// sigma(sigma(y))_i = (y1...y5)^3 y_i for every i.
bool involution_identity();
// G(sigma(y)) = (y1...y5)^2 X(M^-1 y) up to a scalar.
bool roundtrip_ok(const CremonaMap& chi, const Poly& X, const Poly& target_cubic);

// Nonzero scalar c with a = c b, if any.
bool proportional(const Poly& a, const Poly& b, Cyc* c = nullptr);

}  // namespace a5g
