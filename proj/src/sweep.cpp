#include "groupcheck/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "groupcheck/cache.hpp"
#include "groupcheck/catalog.hpp"
#include "groupcheck/errors.hpp"
#include "groupcheck/version.hpp"

namespace groupcheck {

namespace {

using nlohmann::ordered_json;

std::string hex64(std::uint64_t value) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "0x%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

std::vector<std::string> resolve_groups(const SweepOptions& options) {
  std::vector<std::string> names;
  if (options.groups) {
    for (const auto& name : *options.groups) {
      if (!catalog_has(name))
        throw GroupError("unknown catalog group '" + name + "'");
      if (std::find(names.begin(), names.end(), name) == names.end())
        names.push_back(name);
    }
  } else {
    for (const auto& entry : builtin_catalog()) names.push_back(entry.name);
  }
  if (options.max_order > 0) {
    std::vector<std::string> kept;
    for (const auto& name : names) {
      for (const auto& entry : builtin_catalog())
        if (entry.name == name && entry.expected_order <= options.max_order) {
          kept.push_back(name);
          break;
        }
    }
    names = std::move(kept);
  }
  return names;
}

std::vector<std::string> resolve_claims(const SweepOptions& options) {
  std::vector<std::string> ids;
  if (options.claims) {
    for (const auto& id : *options.claims) {
      if (!is_known_claim(id)) throw GroupError("unknown claim id '" + id + "'");
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
  } else {
    for (const auto& info : claim_catalog()) ids.push_back(info.id);
  }
  return ids;
}

ordered_json budgets_json(const Budgets& b) {
  return ordered_json{
      {"fingerprint", hex64(b.fingerprint())},
      {"construction_order_cap", b.construction_order_cap},
      {"lattice_order_cap", b.lattice_order_cap},
      {"lattice_subgroup_cap", b.lattice_subgroup_cap},
      {"sylow_basis_node_cap", b.sylow_basis_node_cap},
      {"dispersion_prime_cap", b.dispersion_prime_cap},
      {"pair_exhaustive_order_cap", b.pair_exhaustive_order_cap},
      {"pair_sample_count", b.pair_sample_count},
      {"pair_sample_seed", hex64(b.pair_sample_seed)}};
}

}  // namespace

SweepReport sweep(const SweepOptions& options) {
  SweepReport report;
  report.tool_version = kToolVersion;
  report.budgets = options.budgets;
  report.group_names = resolve_groups(options);
  report.claim_ids = resolve_claims(options);

  const std::size_t n_groups = report.group_names.size();
  const std::size_t n_claims = report.claim_ids.size();
  report.cells.resize(n_groups * n_claims);

  std::optional<VerdictCache> cache;
  if (options.use_cache) cache.emplace(options.cache_dir);

  const std::uint64_t budget_fp = options.budgets.fingerprint();
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::vector<std::string> errors;

  auto run_group = [&](std::size_t gi) {
    const std::string& name = report.group_names[gi];
    auto g = build_catalog_group(name, options.budgets);
    GroupContext ctx(g, options.budgets);
    for (std::size_t ci = 0; ci < n_claims; ++ci) {
      SweepCell& cell = report.cells[gi * n_claims + ci];
      cell.group_name = name;
      cell.group_order = g->order();
      cell.table_hash = g->table_hash();
      const auto start = std::chrono::steady_clock::now();
      std::optional<VerdictReport> hit;
      if (cache)
        hit = cache->load(g->table_hash(), report.claim_ids[ci], budget_fp);
      if (hit) {
        cell.verdict = std::move(*hit);
        cell.from_cache = true;
      } else {
        cell.verdict = check_claim(ctx, report.claim_ids[ci]);
        if (cache)
          cache->store(g->table_hash(), report.claim_ids[ci], budget_fp,
                       cell.verdict);
      }
      cell.elapsed_ms =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - start)
              .count();
    }
  };

  auto worker = [&] {
    for (;;) {
      const std::size_t gi = next.fetch_add(1);
      if (gi >= n_groups) return;
      try {
        run_group(gi);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        errors.push_back(report.group_names[gi] + ": " + e.what());
      }
    }
  };

  const int jobs = std::max(
      1, std::min(options.jobs, static_cast<int>(n_groups > 0 ? n_groups : 1)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (!errors.empty()) {
    std::sort(errors.begin(), errors.end());
    throw GroupError("sweep aborted: " + errors.front());
  }

  for (std::size_t ci = 0; ci < n_claims; ++ci) {
    ClaimSummary s;
    s.claim_id = report.claim_ids[ci];
    for (std::size_t gi = 0; gi < n_groups; ++gi) {
      const auto& v = report.cells[gi * n_claims + ci].verdict;
      switch (v.status) {
        case ClaimStatus::Passed:
          ++(v.vacuous ? s.vacuous : s.passed);
          break;
        case ClaimStatus::Failed:
          ++s.failed;
          report.any_failed = true;
          break;
        case ClaimStatus::Skipped:
          ++s.skipped;
          break;
      }
    }
    report.summary.push_back(std::move(s));
  }
  return report;
}

ordered_json sweep_to_json(const SweepReport& report, bool include_timing) {
  ordered_json out;
  out["schema_version"] = kReportSchemaVersion;
  out["tool"] = ordered_json{{"name", kToolName}, {"version", kToolVersion}};
  out["budgets"] = budgets_json(report.budgets);
  out["groups"] = report.group_names;
  out["claims"] = report.claim_ids;

  ordered_json results = ordered_json::array();
  for (const auto& cell : report.cells) {
    ordered_json row;
    row["group"] = cell.group_name;
    row["order"] = cell.group_order;
    row["table_hash"] = hex64(cell.table_hash);
    row["verdict"] = verdict_to_json(cell.verdict);
    if (include_timing) {
      row["elapsed_ms"] = cell.elapsed_ms;
      row["from_cache"] = cell.from_cache;
    }
    results.push_back(std::move(row));
  }
  out["results"] = std::move(results);

  ordered_json summary = ordered_json::array();
  for (const auto& s : report.summary)
    summary.push_back(ordered_json{{"claim", s.claim_id},
                                   {"passed", s.passed},
                                   {"vacuous", s.vacuous},
                                   {"failed", s.failed},
                                   {"skipped", s.skipped}});
  out["summary"] = std::move(summary);
  out["any_failed"] = report.any_failed;
  return out;
}

std::string render_sweep_text(const SweepReport& report) {
  std::ostringstream out;
  std::size_t name_width = 5;
  for (const auto& name : report.group_names)
    name_width = std::max(name_width, name.size());
  std::size_t claim_width = 5;
  for (const auto& id : report.claim_ids)
    claim_width = std::max(claim_width, id.size());

  for (const auto& cell : report.cells) {
    out << std::left << std::setw(static_cast<int>(name_width) + 2)
        << cell.group_name << std::setw(static_cast<int>(claim_width) + 2)
        << cell.verdict.claim_id;
    switch (cell.verdict.status) {
      case ClaimStatus::Passed:
        out << (cell.verdict.vacuous ? "pass (vacuous)" : "pass");
        break;
      case ClaimStatus::Failed:
        out << "FAIL";
        for (const auto& w : cell.verdict.witnesses)
          out << "  [" << w.label << "]";
        break;
      case ClaimStatus::Skipped:
        out << "skip";
        if (!cell.verdict.notes.empty())
          out << "  (" << cell.verdict.notes.front() << ")";
        break;
    }
    out << "\n";
  }

  out << "\n";
  for (const auto& s : report.summary) {
    out << std::left << std::setw(static_cast<int>(claim_width) + 2)
        << s.claim_id << "passed " << std::setw(4) << s.passed << " vacuous "
        << std::setw(4) << s.vacuous << " failed " << std::setw(4) << s.failed
        << " skipped " << s.skipped << "\n";
  }
  out << "\n"
      << (report.any_failed ? "RESULT: FAILURES PRESENT" : "RESULT: all passed")
      << "\n";
  return out.str();
}

}  // namespace groupcheck
