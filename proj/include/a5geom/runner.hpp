#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

namespace a5g {

using ojson = nlohmann::ordered_json;

struct RunConfig {
  int conductor = 0;          // 0: take it from the registry
  std::string registry_path;  // empty: built-in registry (or the environment override)
  std::string overlay;        // inline JSON merged after the file overlay
  int jobs = 1;
  bool timings = false;       // include wall times in JSON (breaks byte-identical reruns)
};

enum class Status { pass, fail, skipped };
const char* status_name(Status s);

struct CheckReport {
  std::string id, category, topic, anchor, source;
  Status status = Status::fail;
  ojson expected;
  ojson computed;
  std::vector<std::string> diff;
  std::string reason;  // skip reason or error message
  double seconds = 0;
};

class Runner {
 public:
  // Throws Error(config) on unreadable or malformed registries.
  explicit Runner(const RunConfig& cfg);
  ~Runner();
  Runner(const Runner&) = delete;
  Runner& operator=(const Runner&) = delete;

  int conductor() const;
  std::vector<std::string> ids() const;
  // Matching ids in registry order; throws Error(not_found) when nothing matches.
  std::vector<std::string> select(const std::string& glob) const;
  ojson describe(const std::string& id) const;

  std::vector<CheckReport> run(const std::string& glob, int jobs = 0);

  // Cremona image of the orbit of a point; quadric may be a registry name, a literal, or empty.
  ojson cremona(const std::string& group, const std::string& point, const std::string& quadric);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::string emit_json(const std::vector<CheckReport>& reports, bool timings);
std::string emit_markdown(const std::vector<CheckReport>& reports);
// 0 all pass (skips allowed), 1 any failure.
int exit_code(const std::vector<CheckReport>& reports);

// Built-in registry text, embedded at build time.
const std::string& builtin_registry();
// Name of the environment variable that overrides the registry path.
constexpr const char* kRegistryEnv = "A5GEOM_REGISTRY";

}  // namespace a5g
