#include <cstdlib>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "so2m/cli.hpp"

namespace {

// SO2M_FORMAT sets the default; --format overrides it.
std::string default_format() {
  const char* env = std::getenv("SO2M_FORMAT");
  return env && *env ? env : "text";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace so2m::cli;
  CLI::App app{"Exact computations for special cycles in SO0(2,m) locally symmetric spaces"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = default_format();
  int table = 0;
  int bound = 0;
  bool all = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "rank parameter, m >= 2")->required();
    sub->add_option("--format", format, "json, csv or text (default from SO2M_FORMAT)");
    sub->add_option("--output", cfg.output, "write to this file instead of standard output");
  };
  std::vector<CLI::Option*> bound_options;
  auto add_bound = [&](CLI::App* sub) {
    bound_options.push_back(
        sub->add_option("--bound", bound, "coordinate bound for the parabolic enumeration, at least l + 1"));
  };

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify);
  add_bound(verify);
  verify->add_option("--suite", cfg.suites, "suite to run; repeatable")
      ->check(CLI::IsMember(suite_names()));
  verify->add_flag("--all", all, "run every suite (the default when no --suite is given)");

  auto* tables = app.add_subcommand("tables", "reproduce a published table");
  add_common(tables);
  add_bound(tables);
  tables->add_option("--table", table, "1 or 4 for odd m, 2 or 5 for even m, 3 for any m")->required();

  for (const char* name : {"involutions", "orientation"}) add_common(app.add_subcommand(name, ""));
  auto* aq = app.add_subcommand("aq", "theta-stable parabolic classes");
  auto* cycles = app.add_subcommand("cycles", "classes whose component the special cycles miss");
  auto* automorphic = app.add_subcommand("automorphic", "classes missed by exactly one witness involution");
  for (auto* sub : {aq, cycles, automorphic}) {
    add_common(sub);
    add_bound(sub);
  }
  app.get_subcommand("involutions")->description("catalog with Vogan data and fixed dimensions");
  app.get_subcommand("orientation")->description("component determinants on p0(sigma)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  cfg.command = *parse_command(app.get_subcommands().front()->get_name());
  auto fmt = parse_format(format);
  if (!fmt) {
    std::cerr << "error: unknown format '" << format << "'\n";
    return kUsage;
  }
  cfg.format = *fmt;
  if (cfg.command == Command::Tables) cfg.table = table;
  for (auto* opt : bound_options)
    if (opt->count() > 0) cfg.bound = bound;
  if (all) cfg.suites.clear();
  return run(cfg, std::cout, std::cerr);
}
