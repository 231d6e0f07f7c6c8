#pragma once

#include <string>

#include "groupcheck/group.hpp"

namespace groupcheck {

// Cayley-table text format: `group <name>`, `order <n>`, then n rows of n
// space-separated 0-based indices (row g, column h holds g*h).
std::string emit_table(const GroupPtr& g);

// Permutation text format: `perm <name>`, `degree <d>`, one generator per
// line as d space-separated images. Uses the left-translation action on the
// group itself, so reloading reproduces the group up to relabelling.
std::string emit_permutations(const GroupPtr& g);

// Parses either text format, detected from the first line.
GroupPtr parse_group_text(const std::string& text,
                          const Budgets& budgets = {});

GroupPtr load_group(const std::string& path, const Budgets& budgets = {});

}  // namespace groupcheck
