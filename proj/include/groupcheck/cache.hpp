#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "groupcheck/classify.hpp"

namespace groupcheck {

std::string claim_status_name(ClaimStatus status);
ClaimStatus claim_status_from_name(const std::string& name);

nlohmann::ordered_json verdict_to_json(const VerdictReport& report);

// Strict inverse of verdict_to_json; throws GroupError on malformed input.
VerdictReport verdict_from_json(const nlohmann::json& j);

// On-disk verdict cache.  Entries are keyed by (table hash, claim id, budget
// fingerprint, tool version), so a change to any of these misses cleanly.
// Writers stage to a temporary file and rename, which keeps concurrent
// sweeps safe; corrupt entries are discarded with a warning and recomputed
// by the caller.
class VerdictCache {
 public:
  // An empty directory selects the GROUPCHECK_CACHE_DIR environment
  // variable, falling back to ".groupcheck-cache" under the working
  // directory.
  explicit VerdictCache(std::string directory = "");

  const std::string& directory() const { return directory_; }

  std::optional<VerdictReport> load(std::uint64_t table_hash,
                                    const std::string& claim_id,
                                    std::uint64_t budget_fingerprint) const;

  void store(std::uint64_t table_hash, const std::string& claim_id,
             std::uint64_t budget_fingerprint,
             const VerdictReport& report) const;

 private:
  std::string entry_path(std::uint64_t table_hash, const std::string& claim_id,
                         std::uint64_t budget_fingerprint) const;

  std::string directory_;
};

}  // namespace groupcheck
