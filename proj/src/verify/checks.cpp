#include <algorithm>
#include <set>

#include "a5geom/cremona.hpp"
#include "a5geom/lattice.hpp"
#include "world.hpp"

namespace a5g {

std::shared_ptr<const Group> World::group(const std::string& name) {
  return groups.get(name, [&] {
    auto it = reg.groups.find(name);
    if (it == reg.groups.end()) throw Error(Errc::not_found, "unknown group '" + name + "'");
    return enumerate_group(it->second);
  });
}

std::shared_ptr<const OrbitScan> World::scan(const std::string& g, const std::string& form, int max_len) {
  return scans.get(g + "|" + form + "|" + std::to_string(max_len),
                   [&] { return small_orbits_on(*group(g), reg.form_expr(form), max_len); });
}

std::shared_ptr<const PointOrbit> World::orbit(const std::string& g, const std::string& point) {
  return orbits.get(g + "|" + point, [&] { return orbit_of(reg.point(point), *group(g)); });
}

namespace {

std::vector<Vec> rows_of(const Registry& R, const ojson& forms) {
  std::vector<Vec> rows;
  for (auto& f : forms) rows.push_back(linear_row(parse_poly(f.get<std::string>(), R.F, &R.env)));
  return rows;
}

}  // namespace

std::shared_ptr<const RationalCurve> World::curve(const std::string& name) {
  return curves.get(name, [&]() -> RationalCurve {
    const ojson& s = reg.curve_spec(name);
    std::string kind = s.at("kind");
    if (kind == "line") return line_from_forms(rows_of(reg, s.at("forms")));
    if (kind == "line_points")
      return line_through(reg.point(s.at("points").at(0)), reg.point(s.at("points").at(1)));
    if (kind == "conic") return conic_in_plane(rows_of(reg, s.at("forms")), reg.form(s.at("on")));
    if (kind == "rnc") {
      auto orb = orbit(s.at("group"), s.at("orbit_of"));
      std::size_t take = s.value("take", 7);
      if (orb->length() < take) throw Error(Errc::invalid_argument, "orbit too short for a quartic curve");
      return rnc_through(std::vector<Vec>(orb->points.begin(), orb->points.begin() + static_cast<long>(take)));
    }
    if (kind == "param") {
      RationalCurve C;
      auto& xs = s.at("x");
      if (xs.size() != kVars) throw Error(Errc::invalid_argument, "parametrization needs 5 binary forms");
      std::size_t e = xs.at(0).size();
      for (int i = 0; i < kVars; ++i) {
        if (xs.at(i).size() != e) throw Error(Errc::invalid_argument, "binary forms of unequal degree");
        for (auto& c : xs.at(i)) C.x[i].push_back(reg.cyc(c.get<std::string>()));
      }
      return C;
    }
    throw Error(Errc::invalid_argument, "unknown curve kind '" + kind + "'");
  });
}

std::shared_ptr<const std::vector<RationalCurve>> World::curve_orbit(const std::string& name, const std::string& g) {
  return curve_orbits.get(name + "|" + g, [&] {
    if (g.empty()) return std::vector<RationalCurve>{*curve(name)};
    return a5g::curve_orbit(*curve(name), *group(g));
  });
}

void compare_json(const ojson& expected, const ojson& computed, const std::string& path, std::vector<std::string>& diff) {
  auto where = [&](const std::string& k) { return path.empty() ? k : path + "." + k; };
  if (expected.is_object() && expected.contains("<") && expected.size() == 1) {
    if (!computed.is_number() || !(computed.get<double>() < expected.at("<").get<double>()))
      diff.push_back(path + ": expected < " + expected.at("<").dump() + ", computed " + computed.dump());
    return;
  }
  if (expected.is_object()) {
    if (!computed.is_object()) {
      diff.push_back(path + ": expected " + expected.dump() + ", computed " + computed.dump());
      return;
    }
    for (auto& [k, v] : expected.items()) {
      if (!computed.contains(k)) diff.push_back(where(k) + ": missing from computed result");
      else compare_json(v, computed.at(k), where(k), diff);
    }
    return;
  }
  if (expected != computed) diff.push_back(path + ": expected " + expected.dump() + ", computed " + computed.dump());
}

namespace {

std::string str(const ojson& c, const char* key) { return c.at(key).get<std::string>(); }

std::vector<std::string> strs(const ojson& c, const char* key) {
  std::vector<std::string> out;
  if (c.contains(key))
    for (auto& s : c.at(key)) out.push_back(s.get<std::string>());
  return out;
}

Rat rat(const ojson& v) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  Rat r(v.get<std::string>());
  r.canonicalize();
  return r;
}

ojson census_json(const std::map<int, int>& census) {
  ojson j = ojson::object();
  for (auto [k, v] : census) j[std::to_string(k)] = v;
  return j;
}

bool on_all(const std::vector<Poly>& forms, const Vec& p) {
  for (auto& f : forms)
    if (!f.eval(p).is_zero()) return false;
  return true;
}

bool smooth_at(const Poly& X, const Vec& p) {
  for (int i = 0; i < kVars; ++i)
    if (!X.diff(i).eval(p).is_zero()) return true;
  return false;
}

// Point of the surface {A = 0} ∩ {B = 0}.
SingType surface_type(const Poly& A, const Poly& B, const Vec& p) {
  int dA = A.homogeneous_degree(), dB = B.homogeneous_degree();
  if (dA >= dB && smooth_at(B, p)) return classify_surface_point(A, B, p).type;
  if (dB >= dA && smooth_at(A, p)) return classify_surface_point(B, A, p).type;
  return SingType::other;
}

bool in_span(const std::vector<Poly>& basis, const Poly& p) {
  int d = p.homogeneous_degree();
  auto mons = monomials_of_degree(d);
  auto row = [&](const Poly& q) {
    Vec v;
    for (auto& e : mons) v.push_back(q.coeff(e));
    return v;
  };
  std::vector<Vec> rows;
  for (auto& b : basis) rows.push_back(row(b));
  int r0 = rows.empty() ? 0 : rank(Mat::from_rows(rows));
  rows.push_back(row(p));
  return rank(Mat::from_rows(rows)) == r0;
}

std::string param_key(const Cyc& a1, const Cyc& a2) {
  if (a2.is_zero()) return "[1:0]";
  return "[" + render(a1 / a2) + ":1]";
}

std::string param_key(const Registry& R, const ojson& pair) {
  return param_key(R.cyc(pair.at(0).get<std::string>()), R.cyc(pair.at(1).get<std::string>()));
}

ojson sorted_array(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  ojson j = ojson::array();
  for (auto& s : v) j.push_back(s);
  return j;
}

struct SingCount {
  int count = 0;
  std::map<std::string, int> types;
  std::vector<Vec> points;
};

ojson sing_json(const SingCount& s) {
  ojson t = ojson::object();
  for (auto& [k, v] : s.types) t[k] = v;
  return {{"singular_points", s.count}, {"types", t}};
}

// Singular points of {forms} among the points of the given orbits.
SingCount count_singular(const std::vector<PointOrbit>& orbits, const Poly& F, const Poly* ambient) {
  SingCount sc;
  for (auto& o : orbits)
    for (auto& p : o.points) {
      if (!F.eval(p).is_zero()) continue;
      if (ambient && !ambient->eval(p).is_zero()) continue;
      std::vector<Poly> forms{F};
      if (ambient) forms.push_back(*ambient);
      if (!is_singular_at(forms, p)) continue;
      ++sc.count;
      sc.points.push_back(p);
      SingType t = ambient ? surface_type(F, *ambient, p) : classify_singularity(F, p).type;
      ++sc.types[sing_name(t)];
    }
  return sc;
}

Outcome h_group_census(World& w, const ojson& c) {
  auto G = w.group(str(c, "group"));
  Outcome o;
  o.computed = {{"order", G->order()}, {"census", census_json(G->census())}};
  return o;
}

Outcome h_orbit_rep(World& w, const ojson& c) {
  auto G = w.group(str(c, "group"));
  const Vec& p = w.reg.point(str(c, "point"));
  std::vector<Poly> forms;
  for (auto& f : strs(c, "on")) forms.push_back(w.reg.form_expr(f));
  Outcome o;
  o.computed = {{"length", orbit_of(p, *G).length()}, {"on_variety", on_all(forms, p)}};
  o.expected = c.at("expect");
  o.expected["on_variety"] = true;
  return o;
}

Outcome h_orbit_table(World& w, const ojson& c) {
  auto sc = w.scan(str(c, "group"), str(c, "form"), c.at("max_len"));
  Poly X = w.reg.form_expr(str(c, "form"));
  std::vector<int> lengths;
  for (auto& orb : sc->orbits) lengths.push_back(static_cast<int>(orb.length()));
  std::vector<int> hit(sc->orbits.size(), 0);
  bool matched = true;
  ojson unmatched = ojson::array();
  for (auto& r : strs(c, "reps")) {
    Vec p = normalize_point(w.reg.point(r));
    int found = -1;
    for (std::size_t i = 0; i < sc->orbits.size(); ++i)
      if (sc->orbits[i].contains(p)) found = static_cast<int>(i);
    if (found < 0 || !X.eval(p).is_zero()) {
      matched = false;
      unmatched.push_back(r);
    } else {
      ++hit[found];
    }
  }
  for (int h : hit)
    if (h != 1) matched = false;
  Outcome o;
  o.computed = {{"lengths", lengths}, {"reps_matched", matched}, {"complete", sc->complete}};
  if (!unmatched.empty()) o.computed["unmatched"] = unmatched;
  if (!sc->notes.empty()) o.computed["notes"] = sc->notes;
  return o;
}

Outcome h_stabilizer(World& w, const ojson& c) {
  auto G = w.group(str(c, "group"));
  auto st = stabilizer(w.reg.point(str(c, "point")), *G);
  std::map<int, int> census;
  for (int g : st) ++census[G->elem_order(g)];
  Outcome o;
  o.computed = {{"order", st.size()}, {"census", census_json(census)}};
  return o;
}

Outcome h_membership(World& w, const ojson& c) {
  std::vector<Poly> forms;
  for (auto& f : strs(c, "forms")) forms.push_back(w.reg.form_expr(f));
  int on = 0, n = 0;
  ojson per = ojson::object();
  for (auto& name : strs(c, "points")) {
    bool b = on_all(forms, w.reg.point(name));
    per[name] = b;
    on += b;
    ++n;
  }
  Outcome o;
  o.computed = {{"on", on == n ? ojson(true) : on == 0 ? ojson(false) : ojson("mixed")}, {"points", per}};
  return o;
}

Outcome h_invariant_dim(World& w, const ojson& c) {
  auto G = w.group(str(c, "group"));
  auto basis = invariant_forms(*G, c.at("degree"));
  bool contains = true;
  for (auto& f : strs(c, "contains")) contains = contains && in_span(basis, w.reg.form_expr(f));
  Outcome o;
  o.computed = {{"dim", basis.size()}, {"contains", contains}};
  return o;
}

Outcome h_invariant(World& w, const ojson& c) {
  auto G = w.group(str(c, "group"));
  auto inv = is_invariant(w.reg.form_expr(str(c, "form")), *G);
  bool ones = inv.invariant;
  for (auto& s : inv.scalars) ones = ones && s.is_one();
  Outcome o;
  o.computed = {{"invariant", inv.invariant}, {"scalars_one", ones}};
  return o;
}

Outcome h_sing_census(World& w, const ojson& c) {
  std::string g = str(c, "group");
  bool surf = c.contains("ambient");
  std::string scan_on = surf ? str(c, "ambient") : str(c, "form");
  int max_len = c.at("max_len");
  auto sc = w.scan(g, scan_on, max_len);
  Poly F = w.reg.form_expr(str(c, "form"));
  Poly A = surf ? w.reg.form_expr(scan_on) : Poly();
  std::vector<PointOrbit> orbits = sc->orbits;
  // Points on positive-dimensional families of small orbits: solve for the
  // singular points inside each fixed line or plane.
  bool certified = sc->complete;
  if (!sc->complete && !surf) {
    certified = true;
    auto G = w.group(g);
    std::set<Vec> seen;
    for (auto& o : orbits) seen.insert(o.points.begin(), o.points.end());
    for (auto& span : sc->families) {
      if (span.size() > 3) {
        certified = false;
        continue;
      }
      auto ss = singular_points_in_span(F, span);
      certified = certified && ss.complete;
      for (auto& p : ss.points) {
        if (seen.count(p)) continue;
        auto o = orbit_of(p, *G);
        seen.insert(o.points.begin(), o.points.end());
        if (static_cast<int>(o.length()) <= max_len) orbits.push_back(o);
      }
    }
  }
  SingCount s = count_singular(orbits, F, surf ? &A : nullptr);
  Outcome o;
  o.computed = sing_json(s);
  if (c.contains("orbit")) {
    auto orb = w.orbit(g, str(c, "orbit"));
    bool same = s.points.size() == orb->length();
    for (auto& p : s.points) same = same && orb->contains(p);
    o.computed["orbit_matched"] = same;
  }
  o.computed["families"] = sc->families.size();
  o.computed["certified"] = certified;
  return o;
}

Outcome h_sing_point(World& w, const ojson& c) {
  Poly F = w.reg.form_expr(str(c, "form"));
  const Vec& p = w.reg.point(str(c, "point"));
  Outcome o;
  if (!F.eval(p).is_zero()) {
    o.computed = {{"on_variety", false}};
    return o;
  }
  bool sing = is_singular_at({F}, p);
  o.computed = {{"singular", sing}};
  if (sing) {
    auto rep = classify_singularity(F, p);
    o.computed["type"] = sing_name(rep.type);
    o.computed["corank"] = rep.corank;
  }
  return o;
}

ojson cremona_summary(World& w, const Group& G, const Poly& X, const Vec& p, const ojson& c) {
  auto orb = orbit_of(p, G);
  if (orb.length() != kVars)
    throw Error(Errc::invalid_argument, "orbit has length " + std::to_string(orb.length()) + ", not 5");
  if (!X.eval(p).is_zero()) throw Error(Errc::not_on_variety, "the orbit does not lie on the quadric");
  auto chi = build_cremona(orb.points);
  auto im = image_cubic(chi, X);
  auto eq = conjugated_group(chi, G, im.target);
  auto sc = small_orbits_on(G, im.source, 20);
  SingCount s = count_singular(sc.orbits, im.source, nullptr);
  ojson j = sing_json(s);
  j["solution_dim"] = im.solution_dim;
  j["equivariant"] = eq.ok;
  j["roundtrip"] = roundtrip_ok(chi, X, im.target);
  j["source_invariant"] = is_invariant(im.source, G).invariant;
  if (c.contains("span")) {
    std::vector<Poly> basis;
    for (auto& f : strs(c, "span")) basis.push_back(w.reg.form_expr(f));
    j["in_span"] = in_span(basis, im.source);
  }
  if (c.contains("proportional_to")) j["proportional"] = proportional(im.source, w.reg.form_expr(str(c, "proportional_to")));
  if (c.contains("equivalent_to")) {
    // proportional to some translate g(Y) under a larger group
    auto& e = c.at("equivalent_to");
    Poly Y = w.reg.form_expr(str(e, "form"));
    auto H = w.group(str(e, "group"));
    bool eq = false;
    for (int g = 0; g < H->order() && !eq; ++g) {
      std::array<Poly, kVars> images;
      for (int i = 0; i < kVars; ++i)
        for (int k = 0; k < kVars; ++k) images[i] += Poly::var(k) * H->elem(g)(i, k);
      eq = proportional(im.source, Y.substitute(images));
    }
    j["equivalent"] = eq;
  }
  j["cubic"] = render(im.source);
  j["adapted_cubic"] = render(im.target);
  return j;
}

Outcome h_cremona(World& w, const ojson& c) {
  auto G = w.group(str(c, "group"));
  Outcome o;
  o.computed = cremona_summary(w, *G, w.reg.form_expr(str(c, "quadric")), w.reg.point(str(c, "point")), c);
  return o;
}

Outcome h_cremona_involution(World&, const ojson&) {
  Outcome o;
  o.computed = {{"ok", involution_identity()}};
  return o;
}

Outcome h_cremona_coordinate(World& w, const ojson&) {
  std::vector<Vec> pts;
  for (int i = 0; i < kVars; ++i) {
    Vec e(kVars, Cyc(0L));
    e[i] = Cyc(1L);
    pts.push_back(e);
  }
  (void)w;
  auto chi = build_cremona(pts);
  Outcome o;
  o.computed = {{"identity", chi.M == Mat::identity(kVars)}};
  return o;
}

Outcome h_pencil(World& w, const ojson& c) {
  Poly A = w.reg.form_expr(str(c, "A")), B = w.reg.form_expr(str(c, "B")), X = w.reg.form_expr(str(c, "X"));
  std::string g = str(c, "group");
  std::vector<std::string> found;
  bool whole = true;
  for (auto& name : strs(c, "points")) {
    auto orb = w.orbit(g, name);
    auto rep = pencil_condition(A, B, X, w.reg.point(name));
    if (!rep.singular_member || rep.every_member) {
      found.push_back(rep.every_member ? "every member" : "none");
      continue;
    }
    std::string key = param_key(rep.a1, rep.a2);
    found.push_back(key);
    for (auto& p : orb->points) {
      auto q = pencil_condition(A, B, X, p);
      whole = whole && q.singular_member && !q.every_member && same_parameter(rep.a1, rep.a2, q.a1, q.a2);
    }
  }
  Outcome o;
  o.computed = {{"parameters", sorted_array(found)}, {"whole_orbit", whole}};
  std::vector<std::string> exp;
  for (auto& pr : c.at("expect").at("parameters")) exp.push_back(param_key(w.reg, pr));
  o.expected = c.at("expect");
  o.expected["parameters"] = sorted_array(exp);
  return o;
}

Outcome h_pencil_scan(World& w, const ojson& c) {
  Poly A = w.reg.form_expr(str(c, "A")), B = w.reg.form_expr(str(c, "B")), X = w.reg.form_expr(str(c, "X"));
  auto sc = w.scan(str(c, "group"), str(c, "X"), c.at("max_len"));
  std::vector<Vec> cand;
  for (auto& orb : sc->orbits) cand.insert(cand.end(), orb.points.begin(), orb.points.end());
  std::set<std::string> nonreduced;
  if (c.contains("nonreduced"))
    for (auto& pr : c.at("nonreduced")) nonreduced.insert(param_key(w.reg, pr));
  std::vector<std::string> found;
  bool nr = false;
  for (auto& m : pencil_singular_parameters(A, B, X, cand)) {
    std::string key = param_key(m.a1, m.a2);
    if (nonreduced.count(key)) nr = true;
    else found.push_back(key);
  }
  Outcome o;
  o.computed = {{"parameters", sorted_array(found)}, {"nonreduced_found", nr}};
  std::vector<std::string> exp;
  for (auto& pr : c.at("expect").at("parameters")) exp.push_back(param_key(w.reg, pr));
  o.expected = c.at("expect");
  o.expected["parameters"] = sorted_array(exp);
  return o;
}

Outcome h_sing_along(World& w, const ojson& c) {
  Poly A = w.reg.form_expr(str(c, "A")), B = w.reg.form_expr(str(c, "B"));
  auto C = w.curve(str(c, "curve"));
  Outcome o;
  o.computed = {{"contained", contains_curve({A, B}, *C)}, {"singular_along", singular_along(A, B, *C)},
                {"curve_degree", C->degree()}};
  int full = 0;
  for (long t = 1; t <= 20; ++t) {
    Vec p = C->at(Cyc(1L), Cyc(t));
    Mat J(2, kVars);
    for (int i = 0; i < kVars; ++i) {
      J(0, i) = A.diff(i).eval(p);
      J(1, i) = B.diff(i).eval(p);
    }
    full += rank(J) == 2;
  }
  o.computed["samples_full_rank"] = full;
  const ojson& spec = w.reg.curve_spec(str(c, "curve"));
  if (spec.value("kind", "") == "rnc") {
    auto orb = w.orbit(spec.at("group"), spec.at("orbit_of"));
    int on = 0;
    for (auto& p : orb->points) on += curve_contains_point(*C, p);
    o.computed["orbit_on_curve"] = on;
  }
  return o;
}

Outcome h_curve_points(World& w, const ojson& c) {
  auto C = w.curve(str(c, "curve"));
  ojson counts = ojson::array();
  for (auto& name : strs(c, "points")) {
    auto orb = w.orbit(str(c, "group"), name);
    int on = 0;
    for (auto& p : orb->points) on += curve_contains_point(*C, p);
    counts.push_back(on);
  }
  Outcome o;
  o.computed = {{"on_curve", counts}};
  return o;
}

Outcome h_contains(World& w, const ojson& c) {
  std::vector<Poly> forms;
  for (auto& f : strs(c, "forms")) forms.push_back(w.reg.form_expr(f));
  auto orb = w.curve_orbit(str(c, "curve"), c.value("group", std::string()));
  bool all = true;
  for (auto& C : *orb) all = all && contains_curve(forms, C);
  Outcome o;
  o.computed = {{"contained", all}, {"orbit_size", orb->size()}, {"curve_degree", orb->front().degree()}};
  return o;
}

Outcome h_ci_curve(World& w, const ojson& c) {
  std::vector<Poly> forms;
  std::vector<long> degs;
  for (auto& f : strs(c, "forms")) {
    forms.push_back(w.reg.form_expr(f));
    degs.push_back(forms.back().homogeneous_degree());
  }
  auto ci = ci_curve_genus(degs);
  bool inside = true;
  for (auto& f : strs(c, "inside")) inside = inside && in_ideal_degree(forms, w.reg.form_expr(f));
  bool inv = true;
  if (c.contains("group")) {
    auto G = w.group(str(c, "group"));
    for (auto& f : forms) inv = inv && is_invariant(f, *G).invariant;
  }
  Outcome o;
  o.computed = {{"degree", ci.degree}, {"genus", ci.genus}, {"inside", inside}, {"invariant", inv}};
  return o;
}

Outcome h_disjoint(World& w, const ojson& c) {
  auto orb = w.curve_orbit(str(c, "curve"), str(c, "group"));
  Outcome o;
  o.computed = {{"count", orb->size()}, {"disjoint", lines_pairwise_disjoint(*orb)}};
  if (c.contains("meet_orbit")) {
    auto sing = w.orbit(str(c, "group"), str(c, "meet_orbit"));
    Poly Y = w.reg.form_expr(str(c, "meet_form"));
    int pairs = 0;
    bool at = true;
    for (std::size_t i = 0; i < orb->size(); ++i)
      for (std::size_t j = i + 1; j < orb->size(); ++j) {
        auto p = line_intersection((*orb)[i], (*orb)[j]);
        if (!p) continue;
        ++pairs;
        at = at && sing->contains(*p) && Y.eval(*p).is_zero() && is_singular_at({Y}, *p);
      }
    o.computed["meeting_pairs"] = pairs;
    o.computed["meet_at_singular_orbit"] = at;
  }
  return o;
}

std::string missing_curve(World& w, const std::vector<std::string>& names) {
  for (auto& n : names)
    if (!w.reg.has_curve(n)) return n;
  return {};
}

LinearSystemSpec system_of(World& w, const ojson& c) {
  LinearSystemSpec spec;
  spec.degree = c.at("degree");
  std::string g = c.value("group", std::string());
  for (auto& name : strs(c, "orbits")) {
    auto orb = w.orbit(g, name);
    spec.points.insert(spec.points.end(), orb->points.begin(), orb->points.end());
  }
  for (auto& name : strs(c, "curves")) {
    auto orb = w.curve_orbit(name, g);
    spec.curves.insert(spec.curves.end(), orb->begin(), orb->end());
  }
  return spec;
}

Outcome h_linear_dim(World& w, const ojson& c) {
  Outcome o;
  if (auto m = missing_curve(w, strs(c, "curves")); !m.empty()) {
    o.skipped = true;
    o.reason = "curve " + m + " is not in the registry";
    return o;
  }
  auto spec = system_of(w, c);
  Poly mod;
  if (c.contains("modulo")) mod = w.reg.form_expr(str(c, "modulo"));
  o.computed = {{"dim", linear_system_dim(spec, c.contains("modulo") ? &mod : nullptr)},
                {"points", spec.points.size()}};
  return o;
}

Outcome h_base_free(World& w, const ojson& c) {
  Outcome o;
  auto curves = strs(c, "curves"), probes = strs(c, "probes");
  std::vector<std::string> all = curves;
  all.insert(all.end(), probes.begin(), probes.end());
  if (auto m = missing_curve(w, all); !m.empty()) {
    o.skipped = true;
    o.reason = "curve " + m + " comes from an external source and is not in the registry; supply it with --registry";
    return o;
  }
  auto spec = system_of(w, c);
  std::string g = c.value("group", std::string());
  std::vector<RationalCurve> pr;
  for (auto& name : probes) {
    auto orb = w.curve_orbit(name, g);
    pr.insert(pr.end(), orb->begin(), orb->end());
  }
  Poly amb;
  if (c.contains("ambient")) amb = w.reg.form_expr(str(c, "ambient"));
  auto r = base_curve_free(spec, c.contains("ambient") ? &amb : nullptr, pr);
  o.computed = {{"free", r.free}, {"dim", r.dim}, {"probes", pr.size()}};
  return o;
}

ContextPtr k3_of(const ojson& c) {
  std::vector<K3Curve> cs;
  for (auto& k : c.at("curves")) {
    K3Curve kc;
    kc.name = k.at("name");
    kc.degree = rat(k.at("degree"));
    kc.self = k.contains("self") ? rat(k.at("self")) : k3_self_from_genus(rat(k.at("genus")));
    cs.push_back(kc);
  }
  return k3_context(rat(c.at("h2")), cs);
}

ojson rat_expect(const ojson& e) {
  ojson out = e;
  for (auto& [k, v] : out.items())
    if (v.is_string()) v = rat_str(rat(v));
  return out;
}

Outcome h_lattice_k3(World&, const ojson& c) {
  auto ctx = k3_of(c);
  auto& pr = c.at("pair");
  Outcome o;
  o.computed = {{"value", rat_str(pair(parse_divisor(ctx, pr.at(0)), parse_divisor(ctx, pr.at(1))))}};
  o.expected = rat_expect(c.at("expect"));
  return o;
}

Outcome h_lattice_rr(World&, const ojson& c) {
  auto ctx = k3_of(c);
  Outcome o;
  o.computed = {{"value", rat_str(rr_h0_lower(parse_divisor(ctx, str(c, "class"))))}};
  o.expected = rat_expect(c.at("expect"));
  return o;
}

Outcome h_lattice_blowup(World&, const ojson& c) {
  std::vector<BlowupCurve> cs;
  for (auto& k : c.at("curves")) {
    BlowupCurve b{rat(k.at("degree")), rat(k.at("genus")), rat(k.at("k_dot_c"))};
    int copies = k.value("copies", 1);
    for (int i = 0; i < copies; ++i) cs.push_back(b);
  }
  auto ctx = blowup_context(rat(c.at("h3")), cs);
  auto& t = c.at("triple");
  auto H = generator(ctx, "H"), E = generator(ctx, "E");
  Outcome o;
  o.computed = {{"value", rat_str(triple(parse_divisor(ctx, t.at(0)), parse_divisor(ctx, t.at(1)), parse_divisor(ctx, t.at(2))))},
                {"HE2", rat_str(triple(H, E, E))},
                {"E3", rat_str(triple(E, E, E))}};
  o.expected = rat_expect(c.at("expect"));
  return o;
}

Outcome h_lattice_det(World&, const ojson& c) {
  std::vector<std::vector<Rat>> m;
  for (auto& row : c.at("matrix")) {
    m.emplace_back();
    for (auto& v : row) m.back().push_back(rat(v));
  }
  Outcome o;
  o.computed = {{"value", rat_str(det3(m))}};
  o.expected = rat_expect(c.at("expect"));
  return o;
}

Outcome h_lattice_degeneracy(World&, const ojson& c) {
  auto r = degeneracy_solve(rat(c.at("F2")), rat(c.at("degF")), rat(c.at("C2")), rat(c.at("degC")), rat(c.at("h2")));
  ojson roots = ojson::array(), adm = ojson::array(), self = ojson::array();
  for (auto& x : r.roots) {
    if (!x.rational) {
      roots.push_back("irrational");
      continue;
    }
    roots.push_back(rat_str(x.value));
    if (x.admissible()) adm.push_back(rat_str(x.value));
    if (x.self_case) self.push_back(rat_str(x.value));
  }
  Outcome o;
  o.computed = {{"roots", roots}, {"admissible", adm}, {"self_case", self},
                {"quadratic", {rat_str(r.a), rat_str(r.b), rat_str(r.c)}}};
  o.expected = c.at("expect");
  for (auto& [k, v] : o.expected.items())
    if (v.is_array())
      for (auto& s : v) s = rat_str(rat(s));
  return o;
}

Outcome h_lattice_hodge(World&, const ojson& c) {
  auto hb = hodge_bound(rat(c.at("degree")), rat(c.at("h2")));
  Outcome o;
  o.computed = {{"ratio", rat_str(hb.ratio)}, {"bound", hb.bound}, {"strict", hb.strict}};
  return o;
}

Outcome h_lattice_ci(World&, const ojson& c) {
  auto ci = ci_curve_genus(c.at("degrees").get<std::vector<long>>());
  Outcome o;
  o.computed = {{"degree", ci.degree}, {"genus", ci.genus}};
  return o;
}

Outcome h_lattice_adjunction(World&, const ojson& c) {
  Outcome o;
  o.computed = {{"genus", rat_str(adjunction_genus(rat(c.at("self"))))}};
  o.expected = rat_expect(c.at("expect"));
  return o;
}

Outcome h_lattice_ruled(World&, const ojson& c) {
  auto rc = ruled_restriction_check(c.at("candidates").get<std::vector<std::pair<long, long>>>());
  bool within = true;
  ojson cands = ojson::array();
  for (auto& k : rc.candidates) {
    within = within && k.within_bound;
    cands.push_back({{"a", k.a}, {"b", k.b}, {"degree", k.degree}, {"excluded", k.excluded}});
  }
  Outcome o;
  o.computed = {{"all_excluded", rc.all_excluded},
                {"restriction", rc.restriction_used},
                {"restriction_from_printed_sign", rc.restriction_printed},
                {"E_dot_f", rat_str(rc.e_dot_fibre_used)},
                {"E_dot_f_printed_sign", rat_str(rc.e_dot_fibre_printed)},
                {"section_bound", rat_str(rc.section_bound)},
                {"diagonal_degree", rc.diagonal_degree},
                {"candidates_within_bound", within},
                {"candidates", cands}};
  o.expected = c.at("expect");
  if (o.expected.contains("section_bound")) o.expected["section_bound"] = rat_str(rat(o.expected.at("section_bound")));
  return o;
}

Outcome h_lattice_bookkeeping(World&, const ojson& c) {
  auto b = cremona_bookkeeping(c.at("n"), c.at("m"));
  Outcome o;
  o.computed = {{"involution", b.involution}, {"threshold_swap", b.threshold_swap}, {"n1", b.n1}, {"m1", b.m1}};
  return o;
}

}  // namespace

ojson cremona_report(World& w, const std::string& group, const Vec& p, const Poly* quadric) {
  auto G = w.group(group);
  Poly X;
  if (quadric) {
    X = *quadric;
  } else {
    auto basis = invariant_forms(*G, 2);
    Mat ev(1, static_cast<int>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i) ev(0, static_cast<int>(i)) = basis[i].eval(p);
    auto ker = nullspace(ev);
    if (ker.size() != 1) throw Error(Errc::invalid_argument, "no unique invariant quadric through the orbit; pass --quadric");
    for (std::size_t i = 0; i < basis.size(); ++i) X += basis[i] * ker[0][i];
    X = X * X.leading_coeff().inv();
  }
  ojson j = cremona_summary(w, *G, X, p, ojson::object());
  j["quadric"] = render(X);
  return j;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"group_census", h_group_census},
      {"orbit_rep", h_orbit_rep},
      {"orbit_table", h_orbit_table},
      {"stabilizer", h_stabilizer},
      {"membership", h_membership},
      {"invariant_dim", h_invariant_dim},
      {"invariant", h_invariant},
      {"sing_census", h_sing_census},
      {"sing_point", h_sing_point},
      {"cremona", h_cremona},
      {"cremona_involution", h_cremona_involution},
      {"cremona_coordinate", h_cremona_coordinate},
      {"pencil", h_pencil},
      {"pencil_scan", h_pencil_scan},
      {"sing_along", h_sing_along},
      {"curve_points", h_curve_points},
      {"contains", h_contains},
      {"ci_curve", h_ci_curve},
      {"disjoint", h_disjoint},
      {"linear_dim", h_linear_dim},
      {"base_free", h_base_free},
      {"lattice_k3", h_lattice_k3},
      {"lattice_rr", h_lattice_rr},
      {"lattice_blowup", h_lattice_blowup},
      {"lattice_det", h_lattice_det},
      {"lattice_degeneracy", h_lattice_degeneracy},
      {"lattice_hodge", h_lattice_hodge},
      {"lattice_ci", h_lattice_ci},
      {"lattice_adjunction", h_lattice_adjunction},
      {"lattice_ruled", h_lattice_ruled},
      {"lattice_bookkeeping", h_lattice_bookkeeping},
  };
  return h;
}

}  // namespace a5g
