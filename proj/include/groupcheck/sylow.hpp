#pragma once

#include <optional>
#include <vector>

#include "groupcheck/budgets.hpp"
#include "groupcheck/group.hpp"

namespace groupcheck {

// One Sylow subgroup per prime divisor, pairwise permutable (PQ = QP as
// sets), primes ascending. Such a family exists exactly for soluble groups.
struct SylowBasis {
  std::vector<int> primes;
  std::vector<Subgroup> members;
};

// A prime ordering q_1, ..., q_k of the spectrum together with the tower of
// normal subgroups 1 < T_1 < ... < T_k = G where T_i / T_{i-1} is a full
// Sylow q_i-subgroup of the quotient.
struct DispersionOrdering {
  std::vector<int> primes;
  std::vector<Subgroup> tower;
};

// Deterministic Sylow p-subgroup: grow from the least element of order p by
// normalizer ascent, always picking the least usable element. Returns the
// trivial subgroup when p does not divide the order.
Subgroup sylow_subgroup(const GroupPtr& g, int p);

// All Sylow p-subgroups (the conjugates), sorted by elements.
std::vector<Subgroup> all_sylow(const GroupPtr& g, int p);

// Depth-first search over Sylow classes (primes ascending) for a pairwise
// permutable family. nullopt when the search space is exhausted.
std::optional<SylowBasis> sylow_basis(const GroupPtr& g,
                                      const Budgets& budgets = {});

// Hall pi-subgroup assembled as the product of the basis members for primes
// in pi; absent whenever no Sylow basis is found.
std::optional<Subgroup> hall_subgroup(const GroupPtr& g,
                                      const std::vector<int>& pi,
                                      const Budgets& budgets = {});

// Every Sylow subgroup normal.
bool is_nilpotent(const GroupPtr& g);

// Derived series reaches the trivial subgroup.
bool is_soluble(const GroupPtr& g);

// Every chief factor is a p-group or a p'-group.
bool is_p_soluble(const GroupPtr& g, int p, const Budgets& budgets = {});

// A normal p-complement exists.
bool is_p_nilpotent(const GroupPtr& g, int p, const Budgets& budgets = {});

// G is the direct product of its p-core and its p'-core.
bool is_p_decomposable(const GroupPtr& g, int p, const Budgets& budgets = {});

// Lexicographically least prime ordering whose Sylow tower exists, found by
// recursive descent (normal Sylow in the successive quotients). Throws
// TooManyPrimes past the configured spectrum cap.
std::optional<DispersionOrdering> dispersion_ordering(
    const GroupPtr& g, const Budgets& budgets = {});

}  // namespace groupcheck
