#pragma once

namespace groupcheck {

inline constexpr const char* kToolName = "groupcheck";
inline constexpr const char* kToolVersion = "0.1.0";

// Bumped whenever the JSON report layout or the cache entry layout changes.
inline constexpr int kReportSchemaVersion = 1;

}  // namespace groupcheck
