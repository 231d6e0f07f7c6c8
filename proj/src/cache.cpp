#include "groupcheck/cache.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "groupcheck/errors.hpp"
#include "groupcheck/version.hpp"

namespace groupcheck {

namespace {

using nlohmann::ordered_json;

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

std::string resolve_directory(std::string directory) {
  if (!directory.empty()) return directory;
  if (const char* env = std::getenv("GROUPCHECK_CACHE_DIR"))
    if (*env) return env;
  return ".groupcheck-cache";
}

}  // namespace

std::string claim_status_name(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Passed:
      return "passed";
    case ClaimStatus::Failed:
      return "failed";
    case ClaimStatus::Skipped:
      return "skipped";
  }
  throw InternalCheckError("unhandled claim status");
}

ClaimStatus claim_status_from_name(const std::string& name) {
  if (name == "passed") return ClaimStatus::Passed;
  if (name == "failed") return ClaimStatus::Failed;
  if (name == "skipped") return ClaimStatus::Skipped;
  throw GroupError("unknown claim status '" + name + "'");
}

ordered_json verdict_to_json(const VerdictReport& report) {
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : report.witnesses)
    witnesses.push_back(ordered_json{
        {"label", w.label}, {"note", w.note}, {"elements", w.elements}});
  return ordered_json{{"claim", report.claim_id},
                      {"status", claim_status_name(report.status)},
                      {"vacuous", report.vacuous},
                      {"witnesses", witnesses},
                      {"notes", report.notes}};
}

VerdictReport verdict_from_json(const nlohmann::json& j) {
  try {
    VerdictReport report;
    report.claim_id = j.at("claim").get<std::string>();
    report.status = claim_status_from_name(j.at("status").get<std::string>());
    report.vacuous = j.at("vacuous").get<bool>();
    for (const auto& w : j.at("witnesses")) {
      Witness witness;
      witness.label = w.at("label").get<std::string>();
      witness.note = w.at("note").get<std::string>();
      for (const auto& x : w.at("elements"))
        witness.elements.push_back(x.get<Elem>());
      report.witnesses.push_back(std::move(witness));
    }
    for (const auto& n : j.at("notes"))
      report.notes.push_back(n.get<std::string>());
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw GroupError(std::string("malformed verdict record: ") + e.what());
  }
}

VerdictCache::VerdictCache(std::string directory)
    : directory_(resolve_directory(std::move(directory))) {}

std::string VerdictCache::entry_path(std::uint64_t table_hash,
                                     const std::string& claim_id,
                                     std::uint64_t budget_fingerprint) const {
  return directory_ + "/" + hex64(table_hash) + "-" + claim_id + "-" +
         hex64(budget_fingerprint) + "-" + kToolVersion + ".json";
}

std::optional<VerdictReport> VerdictCache::load(
    std::uint64_t table_hash, const std::string& claim_id,
    std::uint64_t budget_fingerprint) const {
  const std::string path =
      entry_path(table_hash, claim_id, budget_fingerprint);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    const auto j = nlohmann::json::parse(buffer.str());
    auto report = verdict_from_json(j);
    if (report.claim_id != claim_id)
      throw GroupError("cache entry names claim '" + report.claim_id + "'");
    return report;
  } catch (const std::exception& e) {
    std::cerr << "warning: discarding corrupt cache entry " << path << ": "
              << e.what() << "\n";
    std::error_code ec;
    std::filesystem::remove(path, ec);
    return std::nullopt;
  }
}

void VerdictCache::store(std::uint64_t table_hash, const std::string& claim_id,
                         std::uint64_t budget_fingerprint,
                         const VerdictReport& report) const {
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  const std::string path =
      entry_path(table_hash, claim_id, budget_fingerprint);
  // Unique staging name per writer; rename is atomic within the directory.
  std::ostringstream tmp;
  tmp << path << ".tmp." << ::getpid() << "." << std::this_thread::get_id();
  {
    std::ofstream out(tmp.str(), std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << verdict_to_json(report).dump(2) << "\n";
  }
  std::filesystem::rename(tmp.str(), path, ec);
  if (ec) std::filesystem::remove(tmp.str(), ec);
}

}  // namespace groupcheck
