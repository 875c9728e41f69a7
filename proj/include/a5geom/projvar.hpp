#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "a5geom/group.hpp"
#include "a5geom/poly.hpp"

namespace a5g {

// Binary form of degree e: coefficient i belongs to s^(e-i) t^i.
using BinForm = std::vector<Cyc>;

bool is_zero_form(const BinForm& f);
BinForm bin_mul(const BinForm& a, const BinForm& b);
BinForm bin_add(const BinForm& a, const BinForm& b);
Cyc bin_eval(const BinForm& f, const Cyc& s, const Cyc& t);

// Image of P^1 under 5 binary forms of a common degree.
struct RationalCurve {
  std::array<BinForm, kVars> x;
  int degree() const { return static_cast<int>(x[0].size()) - 1; }
  Vec at(const Cyc& s, const Cyc& t) const;
  // Coefficient vectors; they span the linear hull of the curve.
  std::vector<Vec> coefficient_vectors() const;
};

RationalCurve line_through(const Vec& p, const Vec& q);
// Line cut out by three linear forms (rows of coefficients).
RationalCurve line_from_forms(const std::vector<Vec>& forms);
// Conic {L1 = L2 = 0} ∩ {Q = 0}, parametrized through a point found by exact root search.
RationalCurve conic_in_plane(const std::vector<Vec>& forms, const Poly& Q);
// Rational normal quartic through 7 points in general position.
RationalCurve rnc_through(const std::vector<Vec>& pts);
RationalCurve transform(const RationalCurve& C, const Mat& g);
// Linear span of the curve, row-reduced; used to identify lines and conics.
Mat curve_span(const RationalCurve& C);
// Distinct translates g(C) of a curve determined by its span (lines, plane conics).
std::vector<RationalCurve> curve_orbit(const RationalCurve& C, const Group& G);

BinForm restrict_to_curve(const Poly& F, const RationalCurve& C);
bool contains_curve(const std::vector<Poly>& forms, const RationalCurve& C);
bool curve_contains_point(const RationalCurve& C, const Vec& p);

// Throws not_on_variety unless every form vanishes at p.
bool is_singular_at(const std::vector<Poly>& forms, const Vec& p);

enum class SingType { A1, A2, smooth, other };
const char* sing_name(SingType t);

struct SingularityReport {
  Vec point;
  int corank = 0;
  SingType type = SingType::other;
};

// Hypersurface point; throws smooth_point for smooth points.
SingularityReport classify_singularity(const Poly& F, const Vec& p);
// Point of the surface {F = 0} ∩ {X = 0}, X smooth at p and deg F >= deg X.
// Only nodes are recognised; anything else is reported as other.
SingularityReport classify_surface_point(const Poly& F, const Poly& X, const Vec& p);

// All 2x2 minors of the Jacobian of (A, B) vanish identically along C.
bool singular_along(const Poly& A, const Poly& B, const RationalCurve& C);

bool lines_pairwise_disjoint(const std::vector<RationalCurve>& lines);
std::optional<Vec> line_intersection(const RationalCurve& a, const RationalCurve& b);

struct LinearSystemSpec {
  int degree = 1;
  std::vector<Vec> points;
  std::vector<RationalCurve> curves;
};
// Forms of the given degree through all points and containing all curves.
std::vector<Poly> linear_system_basis(const LinearSystemSpec& spec);
// Dimension of that space; with a modulus, of its image in H^0(V, O(d)).
int linear_system_dim(const LinearSystemSpec& spec, const Poly* modulo = nullptr);

struct BaseFreeResult {
  bool free = false;
  int dim = 0;
  std::vector<std::string> witnesses;  // per probe: index of a basis member not containing it, or "none"
};
BaseFreeResult base_curve_free(const LinearSystemSpec& spec, const Poly* ambient,
                               const std::vector<RationalCurve>& probes);

struct PencilPoint {
  Vec point;
  bool singular_member = false;  // some member through p is singular there
  bool every_member = false;     // the condition is vacuous in [a1:a2]
  Cyc a1, a2;
};
struct PencilMember {
  Cyc a1, a2;  // normalized: a2 = 1 unless a2 = 0
  std::vector<Vec> points;
};
PencilPoint pencil_condition(const Poly& A, const Poly& B, const Poly& X, const Vec& p);
std::vector<PencilMember> pencil_singular_parameters(const Poly& A, const Poly& B, const Poly& X,
                                                     const std::vector<Vec>& points);
bool same_parameter(const Cyc& a1, const Cyc& a2, const Cyc& b1, const Cyc& b2);

struct SpanSingularities {
  std::vector<Vec> points;  // normalized
  bool complete = true;     // false: roots outside the field, or a singular curve inside the span
};
// Singular points of the hypersurface {F = 0} inside a projective line or plane
// spanned by `basis`.  Plane case: resultants by evaluation and interpolation.
SpanSingularities singular_points_in_span(const Poly& F, const std::vector<Vec>& basis);

// h lies in the degree-deg(h) part of the ideal generated by gens.
bool in_ideal_degree(const std::vector<Poly>& gens, const Poly& h);

}  // namespace a5g
