#pragma once

#include <functional>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "registry.hpp"

namespace a5g {

// Compute-once cache safe for concurrent callers.
template <class T>
class Memo {
 public:
  using Ptr = std::shared_ptr<const T>;
  Ptr get(const std::string& key, const std::function<T()>& make) {
    std::shared_future<Ptr> fut;
    std::promise<Ptr> prom;
    bool mine = false;
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = m_.find(key);
      if (it == m_.end()) {
        fut = prom.get_future().share();
        m_.emplace(key, fut);
        mine = true;
      } else {
        fut = it->second;
      }
    }
    if (mine) {
      try {
        prom.set_value(std::make_shared<const T>(make()));
      } catch (...) {
        prom.set_exception(std::current_exception());
      }
    }
    return fut.get();
  }

 private:
  std::mutex mu_;
  std::map<std::string, std::shared_future<Ptr>> m_;
};

// Registry view plus shared caches for one constant branch.
struct World {
  Registry reg;
  Memo<Group> groups;
  Memo<OrbitScan> scans;
  Memo<PointOrbit> orbits;
  Memo<RationalCurve> curves;
  Memo<std::vector<RationalCurve>> curve_orbits;

  std::shared_ptr<const Group> group(const std::string& name);
  std::shared_ptr<const OrbitScan> scan(const std::string& group, const std::string& form, int max_len);
  std::shared_ptr<const PointOrbit> orbit(const std::string& group, const std::string& point);
  std::shared_ptr<const RationalCurve> curve(const std::string& name);
  std::shared_ptr<const std::vector<RationalCurve>> curve_orbit(const std::string& name, const std::string& group);
};

struct Outcome {
  ojson computed = ojson::object();
  ojson expected;  // canonical form of the registry expectation
  bool skipped = false;
  std::string reason;
};

using Handler = std::function<Outcome(World&, const ojson&)>;
const std::map<std::string, Handler>& handlers();

// Cremona image of the orbit of p; without a quadric, the unique invariant one through the orbit.
ojson cremona_report(World& w, const std::string& group, const Vec& p, const Poly* quadric);

// Compares only the keys present in `expected`; {"<": v} means strictly below v.
void compare_json(const ojson& expected, const ojson& computed, const std::string& path, std::vector<std::string>& diff);

}  // namespace a5g
