#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "world.hpp"

namespace a5g {

const std::string& builtin_registry() {
  static const std::string text =
#include "registry_embed.inc"
      ;
  return text;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

namespace {

ojson parse_doc(const std::string& text, const std::string& origin) {
  try {
    return ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::config, origin + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::config, "cannot read registry file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_points(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '[' && ch != ']') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

struct Runner::Impl {
  ojson doc;
  int conductor = 0;
  std::vector<std::unique_ptr<World>> worlds;
  std::vector<ojson> checks;
  int jobs = 1;

  const ojson& check(const std::string& id) const {
    for (auto& c : checks)
      if (c.at("id") == id) return c;
    throw Error(Errc::not_found, "unknown check '" + id + "'");
  }

  CheckReport run_one(const ojson& c) {
    CheckReport r;
    r.id = c.at("id");
    r.category = c.value("category", "");
    r.topic = c.value("topic", "");
    r.anchor = c.value("anchor", "");
    r.source = c.value("source", "");
    r.expected = c.value("expect", ojson::object());
    auto t0 = std::chrono::steady_clock::now();
    auto& hs = handlers();
    auto h = hs.find(c.at("kind").get<std::string>());
    if (h == hs.end()) {
      r.reason = "unknown check kind '" + c.at("kind").get<std::string>() + "'";
      return r;
    }
    std::size_t nb = c.value("branches", false) ? worlds.size() : 1;
    ojson per = ojson::array();
    bool skipped = false;
    for (std::size_t b = 0; b < nb; ++b) {
      std::string tag = nb > 1 ? "[branch " + std::to_string(b) + "] " : "";
      try {
        Outcome o = h->second(*worlds[b], c);
        if (o.skipped) {
          skipped = true;
          r.reason = o.reason;
          break;
        }
        ojson exp = o.expected.is_null() ? r.expected : o.expected;
        if (b == 0) r.expected = exp;
        std::vector<std::string> d;
        compare_json(exp, o.computed, "", d);
        for (auto& s : d) r.diff.push_back(tag + s);
        per.push_back(o.computed);
      } catch (const std::exception& e) {
        r.diff.push_back(tag + "error: " + e.what());
        per.push_back({{"error", e.what()}});
      }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (skipped) {
      r.status = Status::skipped;
      r.computed = nullptr;
      return r;
    }
    r.computed = nb > 1 ? ojson{{"branches", per}} : per.at(0);
    r.status = r.diff.empty() ? Status::pass : Status::fail;
    return r;
  }
};

Runner::Runner(const RunConfig& cfg) : impl_(std::make_unique<Impl>()) {
  ojson doc = parse_doc(builtin_registry(), "built-in registry");
  std::string path = cfg.registry_path;
  if (path.empty())
    if (const char* env = std::getenv(kRegistryEnv)) path = env;
  if (!path.empty()) doc = merge_registry(doc, parse_doc(read_file(path), path));
  if (!cfg.overlay.empty()) doc = merge_registry(doc, parse_doc(cfg.overlay, "inline overlay"));
  if (cfg.conductor < 0) throw Error(Errc::config, "conductor must be positive");
  impl_->doc = doc;
  int nb = branch_count(doc);
  for (int b = 0; b < nb; ++b) {
    auto w = std::make_unique<World>();
    w->reg = load_registry(doc, cfg.conductor, b);
    impl_->worlds.push_back(std::move(w));
  }
  impl_->conductor = impl_->worlds[0]->reg.F->conductor();
  impl_->checks = impl_->worlds[0]->reg.checks;
  impl_->jobs = std::max(1, cfg.jobs);
}

Runner::~Runner() = default;

int Runner::conductor() const { return impl_->conductor; }

std::vector<std::string> Runner::ids() const {
  std::vector<std::string> out;
  for (auto& c : impl_->checks) out.push_back(c.at("id"));
  return out;
}

std::vector<std::string> Runner::select(const std::string& glob) const {
  std::vector<std::string> out;
  for (auto& id : ids())
    if (glob.empty() || fnmatch(glob.c_str(), id.c_str(), 0) == 0) out.push_back(id);
  if (out.empty()) throw Error(Errc::not_found, "no check matches '" + glob + "'");
  return out;
}

ojson Runner::describe(const std::string& id) const { return impl_->check(id); }

std::vector<CheckReport> Runner::run(const std::string& glob, int jobs) {
  auto ids = select(glob);
  std::vector<CheckReport> reports(ids.size());
  int nj = jobs > 0 ? jobs : impl_->jobs;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < ids.size();) reports[i] = impl_->run_one(impl_->check(ids[i]));
  };
  if (nj <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nj; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::sort(reports.begin(), reports.end(), [](auto& a, auto& b) { return a.id < b.id; });
  return reports;
}

ojson Runner::cremona(const std::string& group, const std::string& point, const std::string& quadric) {
  World& w = *impl_->worlds[0];
  Vec p;
  if (w.reg.points.count(point)) {
    p = w.reg.point(point);
  } else {
    for (auto& s : split_points(point)) p.push_back(w.reg.cyc(s));
    if (p.size() != kVars) throw Error(Errc::invalid_argument, "a point needs 5 coordinates");
  }
  if (quadric.empty()) return cremona_report(w, group, p, nullptr);
  Poly X = w.reg.form_expr(quadric);
  if (X.homogeneous_degree() != 2) throw Error(Errc::invalid_argument, "not a quadric: " + quadric);
  return cremona_report(w, group, p, &X);
}

std::string emit_json(const std::vector<CheckReport>& reports, bool timings) {
  ojson out;
  out["schema_version"] = 1;
  int np = 0, nf = 0, ns = 0;
  ojson arr = ojson::array();
  for (auto& r : reports) {
    np += r.status == Status::pass;
    nf += r.status == Status::fail;
    ns += r.status == Status::skipped;
    ojson j;
    j["id"] = r.id;
    j["category"] = r.category;
    j["topic"] = r.topic;
    j["anchor"] = r.anchor;
    j["source"] = r.source;
    j["status"] = status_name(r.status);
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    if (!r.diff.empty()) j["diff"] = r.diff;
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (timings) j["seconds"] = r.seconds;
    arr.push_back(j);
  }
  out["summary"] = {{"total", reports.size()}, {"pass", np}, {"fail", nf}, {"skipped", ns}};
  out["checks"] = arr;
  return out.dump(2) + "\n";
}

std::string emit_markdown(const std::vector<CheckReport>& reports) {
  std::map<std::string, std::vector<const CheckReport*>> by_topic;
  int np = 0, nf = 0, ns = 0;
  for (auto& r : reports) {
    by_topic[r.topic.empty() ? "other" : r.topic].push_back(&r);
    np += r.status == Status::pass;
    nf += r.status == Status::fail;
    ns += r.status == Status::skipped;
  }
  std::ostringstream md;
  md << "# Verification report\n\n";
  md << reports.size() << " checks: " << np << " pass, " << nf << " fail, " << ns << " skipped\n";
  for (auto& [topic, rs] : by_topic) {
    md << "\n## " << topic << "\n\n| id | status | category | anchor |\n|---|---|---|---|\n";
    for (auto* r : rs)
      md << "| " << r->id << " | " << status_name(r->status) << " | " << r->category << " | " << r->anchor << " |\n";
    for (auto* r : rs) {
      if (r->status == Status::pass) continue;
      md << "\n### " << r->id << " (" << status_name(r->status) << ")\n\n";
      if (!r->reason.empty()) md << r->reason << "\n\n";
      if (!r->diff.empty()) {
        md << "```\n";
        for (auto& d : r->diff) md << d << "\n";
        md << "```\n";
      }
    }
  }
  return md.str();
}

int exit_code(const std::vector<CheckReport>& reports) {
  for (auto& r : reports)
    if (r.status == Status::fail) return 1;
  return 0;
}

}  // namespace a5g
