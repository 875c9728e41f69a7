// verify: runs the registry checks through the C API.
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "a5geom.h"

namespace {

int fail(a5g_status s) {
  std::cerr << "error (" << a5g_status_name(s) << "): " << a5g_last_error() << "\n";
  return s == A5G_ERR_CONFIG || s == A5G_ERR_NOT_FOUND ? 2 : 1;
}

void print(char* text) {
  std::cout << text;
  if (*text && text[std::char_traits<char>::length(text) - 1] != '\n') std::cout << "\n";
  a5g_string_free(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the A5 geometry registry"};
  app.require_subcommand(1);
  std::string registry;
  int conductor = 0;
  app.add_option("--registry", registry, "JSON overlay merged into the built-in registry");
  app.add_option("--conductor", conductor, "Cyclotomic conductor (default: from the registry)")->check(CLI::NonNegativeNumber);

  auto* run = app.add_subcommand("run", "Run checks and print a report");
  std::string filter, format = "json";
  int jobs = 1;
  bool timings = false;
  run->add_option("--filter", filter, "Glob over check ids");
  run->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
  run->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);
  run->add_flag("--timings", timings, "Add wall times to JSON output");

  auto* list = app.add_subcommand("list", "List check ids");
  list->add_option("--filter", filter, "Glob over check ids");

  auto* describe = app.add_subcommand("describe", "Print the registry entry of a check");
  std::string id;
  describe->add_option("id", id)->required();

  auto* cremona = app.add_subcommand("cremona", "Cremona image of a length-5 orbit");
  std::string group, point, quadric;
  cremona->add_option("--group", group, "Group name in the registry")->required();
  cremona->add_option("--orbit", point, "Point name or [a,b,c,d,e]")->required();
  cremona->add_option("--quadric", quadric, "Quadric name or literal (default: the invariant one through the orbit)");

  // Subcommand options may also carry the shared flags.
  for (auto* sub : {run, list, describe, cremona}) {
    sub->add_option("--registry", registry);
    sub->add_option("--conductor", conductor)->check(CLI::NonNegativeNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  a5g_runner* r = nullptr;
  if (auto s = a5g_runner_new(registry.empty() ? nullptr : registry.c_str(), conductor, &r); s != A5G_OK)
    return fail(s) == 1 ? 1 : 2;

  int rc = 0;
  char* out = nullptr;
  a5g_status s = A5G_OK;
  if (*run) {
    s = a5g_run(r, filter.c_str(), format == "md" ? A5G_FORMAT_MARKDOWN : A5G_FORMAT_JSON, jobs, timings, &out, &rc);
  } else if (*list) {
    s = a5g_list(r, filter.c_str(), &out);
  } else if (*describe) {
    s = a5g_describe(r, id.c_str(), &out);
  } else if (*cremona) {
    s = a5g_cremona(r, group.c_str(), point.c_str(), quadric.empty() ? nullptr : quadric.c_str(), &out);
  }
  if (s != A5G_OK) {
    rc = fail(s);
  } else {
    print(out);
  }
  a5g_runner_free(r);
  return rc;
}
