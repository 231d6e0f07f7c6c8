#pragma once

#include <cstdint>

namespace groupcheck {

// Resource caps for the expensive enumerations. Every cap is part of the
// cache fingerprint so cached verdicts are never reused across budgets.
struct Budgets {
  // Largest group order accepted by any construction path.
  int construction_order_cap = 512;
  // Largest group order for which the full subgroup lattice is enumerated.
  int lattice_order_cap = 360;
  // Abort lattice enumeration past this many subgroups.
  std::int64_t lattice_subgroup_cap = 100000;
  // Abort the Sylow-basis search past this many search tree nodes.
  std::int64_t sylow_basis_node_cap = 200000;
  // Largest prime spectrum for the ordered-tower search (8! orderings).
  int dispersion_prime_cap = 8;
  // Pair-enumeration cutoff: quantified pair checks sample deterministically
  // once the group order exceeds this.
  int pair_exhaustive_order_cap = 60;
  // Number of sampled pairs used above the exhaustive cutoff.
  int pair_sample_count = 2000;
  // Seed for the deterministic subsample.
  std::uint64_t pair_sample_seed = 0x67726f75706b31ULL;

  std::uint64_t fingerprint() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint64_t>(construction_order_cap));
    mix(static_cast<std::uint64_t>(lattice_order_cap));
    mix(static_cast<std::uint64_t>(lattice_subgroup_cap));
    mix(static_cast<std::uint64_t>(sylow_basis_node_cap));
    mix(static_cast<std::uint64_t>(dispersion_prime_cap));
    mix(static_cast<std::uint64_t>(pair_exhaustive_order_cap));
    mix(static_cast<std::uint64_t>(pair_sample_count));
    mix(pair_sample_seed);
    return h;
  }
};

}  // namespace groupcheck
