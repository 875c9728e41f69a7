#include "registry.hpp"

namespace a5g {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::config, "registry: " + what); }

const ojson& need(const ojson& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

}  // namespace

Vec linear_row(const Poly& p) {
  if (p.homogeneous_degree() != 1) throw Error(Errc::invalid_argument, "expected a linear form: " + render(p));
  Vec v(kVars);
  for (int j = 0; j < kVars; ++j) {
    Exps e{};
    e[j] = 1;
    v[j] = p.coeff(e);
  }
  return v;
}

const Poly& Registry::form(const std::string& name) const {
  auto it = forms.find(name);
  if (it == forms.end()) throw Error(Errc::not_found, "unknown form '" + name + "'");
  return it->second;
}

Poly Registry::form_expr(const std::string& text) const {
  auto it = forms.find(text);
  if (it != forms.end()) return it->second;
  return parse_poly(text, F, &env);
}

const Vec& Registry::point(const std::string& name) const {
  auto it = points.find(name);
  if (it == points.end()) throw Error(Errc::not_found, "unknown point '" + name + "'");
  return it->second;
}

Cyc Registry::cyc(const std::string& text) const { return parse_cyc(text, F, &consts); }

const ojson& Registry::curve_spec(const std::string& name) const {
  auto it = curves.find(name);
  if (it == curves.end()) throw Error(Errc::not_found, "unknown curve '" + name + "'");
  return it->second;
}

ojson merge_registry(ojson base, const ojson& overlay) {
  for (const char* table : {"constants", "groups", "forms", "points", "curves"}) {
    if (!overlay.contains(table)) continue;
    for (auto& [k, v] : overlay.at(table).items()) base[table][k] = v;
  }
  if (overlay.contains("checks")) {
    for (auto& c : overlay.at("checks")) {
      bool replaced = false;
      for (auto& b : base["checks"])
        if (b.at("id") == c.at("id")) {
          b = c;
          replaced = true;
        }
      if (!replaced) base["checks"].push_back(c);
    }
  }
  if (overlay.contains("conductor")) base["conductor"] = overlay.at("conductor");
  return base;
}

int branch_count(const ojson& doc) {
  std::size_t n = 1;
  if (doc.contains("constants"))
    for (auto& [k, v] : doc.at("constants").items())
      if (v.is_object() && v.contains("branches")) n = std::max(n, v.at("branches").size());
  return static_cast<int>(n);
}

Registry load_registry(const ojson& doc, int conductor, int branch) {
  Registry R;
  R.branch = branch;
  if (!doc.is_object()) bad("top level must be an object");
  int N = conductor > 0 ? conductor : need(doc, "conductor").get<int>();
  if (N < 1) bad("conductor must be positive");
  R.F = Field::get(N);
  try {
    if (doc.contains("constants"))
      for (auto& [k, v] : doc.at("constants").items()) {
        std::string text;
        if (v.is_string()) text = v.get<std::string>();
        else {
          auto& br = need(v, "branches");
          text = br.at(static_cast<std::size_t>(branch) % br.size()).get<std::string>();
        }
        R.consts[k] = parse_cyc(text, R.F, &R.consts);
        R.env[k] = Poly(R.consts[k]);
      }
    for (auto& [k, v] : need(doc, "groups").items()) {
      std::vector<Mat> gens;
      for (auto& rows : need(v, "generators")) {
        std::vector<Vec> r;
        for (auto& row : rows) r.push_back(linear_row(parse_poly(row.get<std::string>(), R.F, &R.env)));
        if (r.size() != kVars) bad("group '" + k + "': generator needs 5 rows");
        gens.push_back(Mat::from_rows(r));
      }
      R.groups[k] = gens;
    }
    for (auto& [k, v] : need(doc, "forms").items()) {
      Poly p = parse_poly(v.get<std::string>(), R.F, &R.env);
      R.forms[k] = p;
      R.env[k] = p;
    }
    for (auto& [k, v] : need(doc, "points").items()) {
      Vec p;
      for (auto& c : v) p.push_back(parse_cyc(c.get<std::string>(), R.F, &R.consts));
      if (p.size() != kVars) bad("point '" + k + "' needs 5 coordinates");
      R.points[k] = p;
    }
    if (doc.contains("curves"))
      for (auto& [k, v] : doc.at("curves").items()) R.curves[k] = v;
  } catch (const Error& e) {
    if (e.code() == Errc::config) throw;
    throw Error(Errc::config, std::string("registry: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
  std::map<std::string, int> seen;
  for (auto& c : need(doc, "checks")) {
    if (!c.contains("id") || !c.contains("kind")) bad("check without id or kind");
    if (seen[c.at("id").get<std::string>()]++) bad("duplicate check id " + c.at("id").get<std::string>());
    R.checks.push_back(c);
  }
  return R;
}

}  // namespace a5g
