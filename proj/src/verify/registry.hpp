#pragma once

#include <map>
#include <string>
#include <vector>

#include "a5geom/projvar.hpp"
#include "a5geom/runner.hpp"

namespace a5g {

// One parsed view of the registry; constants with several branches are
// resolved to branch `branch`.
struct Registry {
  const Field* F = nullptr;
  int branch = 0;
  CycEnv consts;
  PolyEnv env;  // constants and named forms
  std::map<std::string, std::vector<Mat>> groups;
  std::map<std::string, Poly> forms;
  std::map<std::string, Vec> points;
  std::map<std::string, ojson> curves;
  std::vector<ojson> checks;

  const Poly& form(const std::string& name) const;
  // Registry name, or any polynomial literal over the named forms.
  Poly form_expr(const std::string& text) const;
  const Vec& point(const std::string& name) const;
  Cyc cyc(const std::string& text) const;
  const ojson& curve_spec(const std::string& name) const;
  bool has_curve(const std::string& name) const { return curves.count(name) != 0; }
};

// Merges an overlay into the base document: named tables by key, checks by id.
ojson merge_registry(ojson base, const ojson& overlay);
int branch_count(const ojson& doc);
Registry load_registry(const ojson& doc, int conductor, int branch);

// Linear form literal to its coefficient row.
Vec linear_row(const Poly& p);

}  // namespace a5g
