#include "a5geom.h"

#include <cstring>
#include <string>

#include "a5geom/error.hpp"
#include "a5geom/poly.hpp"
#include "a5geom/runner.hpp"

struct a5g_runner {
  std::unique_ptr<a5g::Runner> impl;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
a5g_status guard(F&& f) {
  last_error.clear();
  try {
    f();
    return A5G_OK;
  } catch (const a5g::Error& e) {
    last_error = e.what();
    return static_cast<a5g_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    last_error = e.what();
    return A5G_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return A5G_ERR_INTERNAL;
  }
}

const char* nz(const char* s) { return s ? s : ""; }

}  // namespace

extern "C" {

a5g_status a5g_runner_new(const char* registry_path, int conductor, a5g_runner** out) {
  if (!out) return A5G_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  return guard([&] {
    a5g::RunConfig cfg;
    cfg.registry_path = nz(registry_path);
    cfg.conductor = conductor;
    auto r = std::make_unique<a5g_runner>();
    r->impl = std::make_unique<a5g::Runner>(cfg);
    *out = r.release();
  });
}

void a5g_runner_free(a5g_runner* r) { delete r; }

int a5g_runner_conductor(const a5g_runner* r) { return r ? r->impl->conductor() : 0; }

a5g_status a5g_run(a5g_runner* r, const char* filter, a5g_format format, int jobs, int timings, char** out_text,
                   int* exit_code) {
  if (!r || !out_text) return A5G_ERR_INVALID_ARGUMENT;
  return guard([&] {
    auto reports = r->impl->run(nz(filter), jobs);
    std::string text = format == A5G_FORMAT_MARKDOWN ? a5g::emit_markdown(reports) : a5g::emit_json(reports, timings != 0);
    *out_text = dup(text);
    if (exit_code) *exit_code = a5g::exit_code(reports);
  });
}

a5g_status a5g_list(a5g_runner* r, const char* filter, char** out_json) {
  if (!r || !out_json) return A5G_ERR_INVALID_ARGUMENT;
  return guard([&] {
    a5g::ojson arr = a5g::ojson::array();
    for (auto& id : r->impl->select(nz(filter))) {
      auto d = r->impl->describe(id);
      arr.push_back({{"id", id}, {"category", d.value("category", "")}, {"topic", d.value("topic", "")}});
    }
    *out_json = dup(arr.dump(2));
  });
}

a5g_status a5g_describe(a5g_runner* r, const char* id, char** out_json) {
  if (!r || !id || !out_json) return A5G_ERR_INVALID_ARGUMENT;
  return guard([&] { *out_json = dup(r->impl->describe(id).dump(2)); });
}

a5g_status a5g_cremona(a5g_runner* r, const char* group, const char* point, const char* quadric, char** out_json) {
  if (!r || !group || !point || !out_json) return A5G_ERR_INVALID_ARGUMENT;
  return guard([&] { *out_json = dup(r->impl->cremona(group, point, nz(quadric)).dump(2)); });
}

a5g_status a5g_cyc_render(const char* literal, int conductor, char** out) {
  if (!literal || !out) return A5G_ERR_INVALID_ARGUMENT;
  return guard([&] { *out = dup(a5g::render(a5g::parse_cyc(literal, a5g::Field::get(conductor)))); });
}

a5g_status a5g_poly_render(const char* literal, int conductor, char** out) {
  if (!literal || !out) return A5G_ERR_INVALID_ARGUMENT;
  return guard([&] { *out = dup(a5g::render(a5g::parse_poly(literal, a5g::Field::get(conductor)))); });
}

const char* a5g_last_error(void) { return last_error.c_str(); }

const char* a5g_status_name(a5g_status s) {
  if (s == A5G_OK) return "ok";
  if (s == A5G_ERR_INTERNAL) return "internal";
  return a5g::errc_name(static_cast<a5g::Errc>(static_cast<int>(s)));
}

void a5g_string_free(char* s) { std::free(s); }

}  // extern "C"
