#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "groupcheck/budgets.hpp"
#include "groupcheck/group.hpp"

namespace groupcheck {

// One factor upper/lower of a chief series; lower is normal in the whole
// group and the factor has no normal subgroup of the group strictly between.
struct ChiefFactor {
  Subgroup lower;
  Subgroup upper;
  int order;
  // p when the factor is an elementary abelian p-group, 0 otherwise (the
  // factor is then a product of isomorphic nonabelian simple groups).
  int prime;
  bool elementary_abelian;
  // [upper, G] <= lower
  bool central;
};

// Every subgroup of a group, sorted by (order, elements lexicographically).
struct SubgroupLattice {
  GroupPtr group;
  std::vector<Subgroup> subgroups;
  // Conjugacy classes as sorted index lists, ordered by first member.
  std::vector<std::vector<std::size_t>> conjugacy_classes;
  // Indices of the normal members (classes of size one).
  std::vector<std::size_t> normal_indices;

  const Subgroup& trivial() const { return subgroups.front(); }
  const Subgroup& whole() const { return subgroups.back(); }

  // Binary search by (order, elements); input must be sorted.
  std::optional<std::size_t> index_of(const std::vector<Elem>& elements) const;
};

// Enumerates every subgroup. Soluble subgroups come from cyclic extension
// (extending H by normalizing elements of prime coset order); when the group
// is insoluble a join sweep <H, x> completes the enumeration.
SubgroupLattice all_subgroups(const GroupPtr& g, const Budgets& budgets = {});

// Every p-subgroup, sorted by (order, elements). p must be prime.
std::vector<Subgroup> all_p_subgroups(const GroupPtr& g, int p,
                                      const Budgets& budgets = {});

bool is_normal(const GroupPtr& g, const Subgroup& s);

// Wielandt descent: iterate K -> normal closure of s in K starting from the
// whole group; s is subnormal exactly when the descent reaches s.
bool is_subnormal(const GroupPtr& g, const Subgroup& s);

// Smallest normal subgroup containing s.
Subgroup normal_closure(const GroupPtr& g, const Subgroup& s);

// Largest normal subgroup contained in s (intersection of the conjugates).
Subgroup normal_core(const GroupPtr& g, const Subgroup& s);

// All normal subgroups, sorted by (order, elements). Computed directly by
// closing the normal closures of cyclic subgroups under products, so it does
// not need the full lattice.
std::vector<Subgroup> normal_subgroups(const GroupPtr& g,
                                       const Budgets& budgets = {});

std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lattice);
std::vector<Subgroup> maximal_subgroups(const GroupPtr& g,
                                        const Budgets& budgets = {});

std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr& g,
                                               const Budgets& budgets = {});

// Ascending chief series 1 = N_0 < ... < N_r = G; each step picks the
// smallest (order, elements) normal subgroup covering the previous one.
std::vector<ChiefFactor> chief_series(const GroupPtr& g,
                                      const Budgets& budgets = {});

// Small deterministic generating set (greedy by least element outside the
// running closure).
std::vector<Elem> small_generators(const GroupPtr& g,
                                   const std::vector<Elem>& elements);

// Number of full lattice enumerations performed by this process. Lets tests
// confirm that cached runs do not recompute lattices.
std::uint64_t lattice_build_count();

}  // namespace groupcheck
