#pragma once

#include <vector>

#include "groupcheck/budgets.hpp"
#include "groupcheck/group.hpp"
#include "groupcheck/lattice.hpp"

namespace groupcheck {

// Ascending central series 1 = Z_0 <= Z_1 <= ...; terms stop at the first
// repetition, so terms.back() is the hypercentre.
struct CentralSeries {
  std::vector<Subgroup> terms;
};

Subgroup centre(const GroupPtr& g);

// Z_{i+1} = {x : [x, g] in Z_i for all g}, pulled back directly without
// building quotient groups.
CentralSeries upper_central_series(const GroupPtr& g);

Subgroup hypercentre(const GroupPtr& g);

// Same subgroup, computed the dual way: the largest normal subgroup N that
// admits an ascending chain of normal subgroups with all factors central.
// Serves as an independent cross-check of hypercentre().
Subgroup hypercentre_by_chief(const GroupPtr& g, const Budgets& budgets = {});

Subgroup derived_subgroup(const GroupPtr& g);

// G >= G' >= G'' >= ...; stops at the first repetition.
std::vector<Subgroup> derived_series(const GroupPtr& g);

// Largest normal p-subgroup, computed as the intersection of all Sylow
// p-subgroups. p must be prime.
Subgroup p_core(const GroupPtr& g, int p);

// Largest normal subgroup whose order only involves primes from pi,
// found by scanning the normal subgroups.
Subgroup pi_core(const GroupPtr& g, const std::vector<int>& pi,
                 const Budgets& budgets = {});

// Product of the p-cores: the largest normal nilpotent subgroup.
Subgroup fitting(const GroupPtr& g);

// Intersection of the maximal subgroups (the whole group when there are
// none, i.e. for the trivial group).
Subgroup frattini(const SubgroupLattice& lattice);
Subgroup frattini(const GroupPtr& g, const Budgets& budgets = {});

// Product of the normal Sylow subgroups, one per prime.
Subgroup f0(const GroupPtr& g);

// Focal subgroup of a Sylow subgroup: generated by x^{-1} y over pairs of
// G-conjugate elements x, y of P. Throws NotSylow unless P is a full Sylow
// subgroup.
Subgroup focal_subgroup(const GroupPtr& g, const Subgroup& sylow);

}  // namespace groupcheck
