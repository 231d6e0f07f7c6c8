#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "groupcheck/budgets.hpp"
#include "groupcheck/classify.hpp"

namespace groupcheck {

struct SweepOptions {
  // nullopt selects the full builtin catalog / the full claim catalog; an
  // explicitly empty list selects nothing.
  std::optional<std::vector<std::string>> groups;
  std::optional<std::vector<std::string>> claims;
  // Keep only groups of order <= max_order (0 = no bound).
  int max_order = 0;
  int jobs = 1;
  bool use_cache = true;
  std::string cache_dir;
  Budgets budgets;
};

// One (group, claim) verdict with its provenance.
struct SweepCell {
  std::string group_name;
  int group_order = 0;
  std::uint64_t table_hash = 0;
  VerdictReport verdict;
  double elapsed_ms = 0.0;
  bool from_cache = false;
};

struct ClaimSummary {
  std::string claim_id;
  int passed = 0;
  int vacuous = 0;
  int failed = 0;
  int skipped = 0;
};

struct SweepReport {
  std::string tool_version;
  Budgets budgets;
  std::vector<std::string> group_names;
  std::vector<std::string> claim_ids;
  // Group-major, claims in claim_ids order within each group.
  std::vector<SweepCell> cells;
  std::vector<ClaimSummary> summary;
  bool any_failed = false;
};

// Runs every selected claim on every selected group.  Workers process whole
// groups so each group's lattice is built once; cells land in preallocated
// slots, making the report independent of scheduling.  Throws GroupError for
// unknown group names or claim ids.
SweepReport sweep(const SweepOptions& options = {});

// `include_timing` adds the per-cell elapsed time and cache provenance;
// these are the only fields that may differ between identical runs.
nlohmann::ordered_json sweep_to_json(const SweepReport& report,
                                     bool include_timing = false);

std::string render_sweep_text(const SweepReport& report);

}  // namespace groupcheck
