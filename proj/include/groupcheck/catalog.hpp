#pragma once

#include <string>
#include <vector>

#include "groupcheck/group.hpp"

namespace groupcheck {

// One named builtin group. `recipe` is a human-readable description of the
// construction; the name is the stable lookup key.
struct CatalogEntry {
  std::string name;
  std::string recipe;
  int expected_order = 0;
};

// The builtin groups, in canonical sweep order.
const std::vector<CatalogEntry>& builtin_catalog();

bool catalog_has(const std::string& name);

// Constructs a catalog group by name. Throws GroupError for unknown names.
GroupPtr build_catalog_group(const std::string& name,
                             const Budgets& budgets = {});

}  // namespace groupcheck
