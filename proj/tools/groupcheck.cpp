#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "groupcheck/analyze.hpp"
#include "groupcheck/catalog.hpp"
#include "groupcheck/errors.hpp"
#include "groupcheck/io.hpp"
#include "groupcheck/sweep.hpp"
#include "groupcheck/version.hpp"

namespace {

using namespace groupcheck;

GroupPtr group_by_name_or_path(const std::string& target) {
  if (catalog_has(target)) return build_catalog_group(target);
  return load_group(target);
}

int run_analyze(const std::string& target, const std::string& format) {
  const auto report = analyze(group_by_name_or_path(target));
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << render_analysis_text(report);
  return 0;
}

int run_sweep(const SweepOptions& options, const std::string& format,
              bool timing) {
  const auto report = sweep(options);
  if (format == "json")
    std::cout << sweep_to_json(report, timing).dump(2) << "\n";
  else
    std::cout << render_sweep_text(report);
  return report.any_failed ? 1 : 0;
}

int run_catalog(bool names_only) {
  if (names_only) {
    for (const auto& entry : builtin_catalog()) std::cout << entry.name << "\n";
    return 0;
  }
  std::size_t width = 4;
  for (const auto& entry : builtin_catalog())
    width = std::max(width, entry.name.size());
  for (const auto& entry : builtin_catalog()) {
    std::cout << entry.name << std::string(width + 2 - entry.name.size(), ' ')
              << entry.expected_order << "\t" << entry.recipe << "\n";
  }
  return 0;
}

int run_emit(const std::string& name, const std::string& format) {
  auto g = build_catalog_group(name);
  std::cout << (format == "perm" ? emit_permutations(g) : emit_table(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite group structure analyzer and theorem checker"};
  app.set_version_flag("--version",
                       std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  std::string analyze_target;
  std::string analyze_format = "json";
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "report the structure of one group (catalog name or file)");
  analyze_cmd->add_option("target", analyze_target, "catalog name or file path")
      ->required();
  analyze_cmd->add_option("--format", analyze_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> sweep_groups;
  std::vector<std::string> sweep_claims;
  SweepOptions sweep_options;
  std::string sweep_format = "json";
  bool no_cache = false;
  bool timing = false;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "check claims across catalog groups");
  sweep_cmd->add_option("--groups", sweep_groups, "catalog group names")
      ->delimiter(',');
  sweep_cmd->add_option("--claims", sweep_claims, "claim ids")->delimiter(',');
  sweep_cmd->add_option("--max-order", sweep_options.max_order,
                        "keep only groups of order <= N");
  sweep_cmd->add_option("--jobs", sweep_options.jobs, "worker threads");
  sweep_cmd->add_option("--format", sweep_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  sweep_cmd->add_flag("--no-cache", no_cache, "disable the verdict cache");
  sweep_cmd->add_flag("--timing", timing,
                      "include per-cell timing in json output");

  bool names_only = false;
  auto* catalog_cmd =
      app.add_subcommand("catalog", "show the builtin group catalog");
  catalog_cmd->add_flag("--list", names_only, "print names only");

  std::string emit_name;
  std::string emit_format = "table";
  auto* emit_cmd =
      app.add_subcommand("emit", "write a catalog group in a file format");
  emit_cmd->add_option("name", emit_name, "catalog group name")->required();
  emit_cmd->add_option("--format", emit_format, "table or perm")
      ->check(CLI::IsMember({"table", "perm"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze_cmd))
      return run_analyze(analyze_target, analyze_format);
    if (app.got_subcommand(sweep_cmd)) {
      if (sweep_cmd->count("--groups")) sweep_options.groups = sweep_groups;
      if (sweep_cmd->count("--claims")) sweep_options.claims = sweep_claims;
      sweep_options.use_cache = !no_cache;
      return run_sweep(sweep_options, sweep_format, timing);
    }
    if (app.got_subcommand(catalog_cmd)) return run_catalog(names_only);
    if (app.got_subcommand(emit_cmd)) return run_emit(emit_name, emit_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
