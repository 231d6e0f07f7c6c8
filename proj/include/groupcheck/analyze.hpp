#pragma once

#include <string>

#include "json.hpp"

#include "groupcheck/budgets.hpp"
#include "groupcheck/group.hpp"

namespace groupcheck {

// Full structure report for one group: order and primes, the characteristic
// subgroups, Sylow basis and dispersion data, Carter and Schmidt summaries,
// the normalizer-condition scans and the classification verdict.  Fields
// whose computation overruns a budget are replaced by {"skipped": reason};
// the report never contains timing data, so equal inputs give equal bytes.
nlohmann::ordered_json analyze(const GroupPtr& g, const Budgets& budgets = {});

// Human-readable rendering of an analyze() report.
std::string render_analysis_text(const nlohmann::ordered_json& report);

}  // namespace groupcheck
