#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "a5geom/error.hpp"

namespace a5g {

using Rat = mpq_class;

// Named generators with a symmetric bilinear form (surfaces) or a
// symmetric trilinear form (threefolds).
class IntersectionContext {
 public:
  IntersectionContext(std::vector<std::string> names, int arity);
  int arity() const { return arity_; }
  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  int index(const std::string& name) const;  // throws not_found

  // Sets every permutation of the slots.
  void set(const std::vector<int>& slots, const Rat& v);
  Rat get(const std::vector<int>& slots) const;

 private:
  std::size_t flat(const std::vector<int>& slots) const;
  std::vector<std::string> names_;
  int arity_;
  std::vector<Rat> table_;
};

using ContextPtr = std::shared_ptr<const IntersectionContext>;

struct DivisorClass {
  ContextPtr ctx;
  std::vector<Rat> c;
  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator*(const Rat& s) const;
};

// "3H - C", "2H-E", "1/2 s + 3f"
DivisorClass parse_divisor(const ContextPtr& ctx, const std::string& text);
DivisorClass generator(const ContextPtr& ctx, const std::string& name);

Rat pair(const DivisorClass& a, const DivisorClass& b);
Rat triple(const DivisorClass& a, const DivisorClass& b, const DivisorClass& c);

// K3 surface context with H^2 given and curve classes by (degree, self-intersection).
struct K3Curve {
  std::string name;
  Rat degree;
  Rat self;
};
ContextPtr k3_context(const Rat& h2, const std::vector<K3Curve>& curves,
                      const std::vector<std::pair<std::pair<std::string, std::string>, Rat>>& extra = {});

struct BlowupCurve {
  Rat degree;
  Rat genus;
  Rat k_dot_c;  // K_X . C
};
// Generators H, E: H^2 E = 0, H E^2 = -sum deg, E^3 = sum (2 - 2g + K.C).
ContextPtr blowup_context(const Rat& h3, const std::vector<BlowupCurve>& curves);

// C^2 / 2 + 1; throws invalid_argument on odd C^2.
Rat adjunction_genus(const Rat& self);
Rat k3_self_from_genus(const Rat& genus);

struct CiCurve {
  long degree = 0;
  long genus = 0;
};
// Curve in P^4 cut out by three forms: 2g - 2 = prod(d) (sum(d) - 5).
CiCurve ci_curve_genus(const std::vector<long>& degrees);

struct HodgeBound {
  Rat ratio;        // (C.H)^2 / H^2
  long bound = 0;   // floor of the ratio
  long strict = 0;  // largest even integer < ratio, for classes not proportional to H
};
HodgeBound hodge_bound(const Rat& degree, const Rat& h2);

// 2 + D^2 / 2 on a K3 surface.
Rat rr_h0_lower(const DivisorClass& D);

struct DegeneracyRoot {
  bool rational = false;
  Rat value;
  bool integer = false;
  bool nonnegative = false;
  bool self_case = false;  // x = F^2 = C^2 with equal degrees: C may equal F
  bool admissible() const { return integer && (nonnegative || self_case); }
};
struct DegeneracyResult {
  Rat a, b, c;  // a x^2 + b x + c = 0
  Rat discriminant;
  std::vector<DegeneracyRoot> roots;
};
// Roots x = F.C of det [[H^2, degF, degC], [degF, F^2, x], [degC, x, C^2]] = 0.
DegeneracyResult degeneracy_solve(const Rat& f2, const Rat& degF, const Rat& c2, const Rat& degC, const Rat& h2);

Rat det3(const std::vector<std::vector<Rat>>& m);

struct RuledCandidate {
  long a = 0, b = 0;
  long degree = 0;  // (as + bf).(s + 3f)
  bool within_bound = false;
  bool excluded = false;
};
struct RuledCheck {
  std::string restriction_printed;  // (2H - E)|_E from E|_E = s - 5f
  std::string restriction_used;     // from E|_E = -s + 5f
  Rat e_dot_fibre_printed, e_dot_fibre_used, e_self;
  Rat section_bound;                // s.((3 - 2r)s + (9 - 2r)f) at r = 0
  long diagonal_degree = 0;
  std::vector<RuledCandidate> candidates;
  bool all_excluded = false;
};
// Degree of the ruled surface over the quartic is fixed by H.C = 4 and deg N = 10.
RuledCheck ruled_restriction_check(const std::vector<std::pair<long, long>>& candidates);

struct CremonaBookkeeping {
  bool involution = false;       // [[4,-5],[3,-4]]^2 = 1
  bool threshold_swap = false;   // 2m' - n' = 2n - 3m
  long n1 = 0, m1 = 0;           // image of a sample (n, m)
};
CremonaBookkeeping cremona_bookkeeping(long n, long m);

std::string rat_str(const Rat& r);

}  // namespace a5g
