#include "groupcheck/characteristic.hpp"

#include <algorithm>
#include <numeric>

#include "groupcheck/elemset.hpp"
#include "groupcheck/sylow.hpp"

namespace groupcheck {

namespace {

void check_parent(const GroupPtr& g, const Subgroup& s) {
  if (s.parent().get() != g.get()) {
    throw NotASubgroup("subgroup belongs to a different group");
  }
}

std::vector<Elem> closure_of(const GroupPtr& g, const std::vector<Elem>& gens) {
  detail::ElemSet bits(g->order());
  bits.set(0);
  std::vector<Elem> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Elem gen : gens) {
      const Elem y = g->mul(queue[head], gen);
      if (!bits.test(y)) {
        bits.set(y);
        queue.push_back(y);
      }
    }
  }
  return bits.to_sorted<Elem>();
}

std::vector<Elem> derived_of(const GroupPtr& g,
                             const std::vector<Elem>& elems) {
  detail::ElemSet comms(g->order());
  for (Elem a : elems) {
    for (Elem b : elems) comms.set(g->comm(a, b));
  }
  return closure_of(g, comms.to_sorted<Elem>());
}

bool order_supported_on(const Subgroup& s, const std::vector<int>& pi) {
  int o = s.order();
  for (int p : pi) {
    while (o % p == 0) o /= p;
  }
  return o == 1;
}

}  // namespace

Subgroup centre(const GroupPtr& g) {
  std::vector<Elem> out;
  for (int x = 0; x < g->order(); ++x) {
    bool central = true;
    for (int y = 0; y < g->order(); ++y) {
      if (g->mul(static_cast<Elem>(x), static_cast<Elem>(y)) !=
          g->mul(static_cast<Elem>(y), static_cast<Elem>(x))) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(static_cast<Elem>(x));
  }
  return Subgroup::trusted(g, std::move(out));
}

CentralSeries upper_central_series(const GroupPtr& g) {
  CentralSeries series;
  series.terms.push_back(trivial_subgroup(g));
  while (true) {
    const auto& prev = series.terms.back();
    const auto bits = detail::ElemSet::of(g->order(), prev.elements());
    std::vector<Elem> next;
    for (int x = 0; x < g->order(); ++x) {
      bool lifts = true;
      for (int y = 0; y < g->order(); ++y) {
        if (!bits.test(
                g->comm(static_cast<Elem>(x), static_cast<Elem>(y)))) {
          lifts = false;
          break;
        }
      }
      if (lifts) next.push_back(static_cast<Elem>(x));
    }
    if (next.size() == prev.elements().size()) break;
    series.terms.push_back(Subgroup::trusted(g, std::move(next)));
  }
  return series;
}

Subgroup hypercentre(const GroupPtr& g) {
  return upper_central_series(g).terms.back();
}

Subgroup hypercentre_by_chief(const GroupPtr& g, const Budgets& budgets) {
  const int n = g->order();
  const auto normals = normal_subgroups(g, budgets);
  std::vector<detail::ElemSet> bits;
  bits.reserve(normals.size());
  for (const auto& s : normals) {
    bits.push_back(detail::ElemSet::of(n, s.elements()));
  }

  auto factor_central = [&](std::size_t upper, std::size_t lower) {
    for (Elem m : normals[upper].elements()) {
      for (int x = 0; x < n; ++x) {
        if (!bits[lower].test(g->comm(m, static_cast<Elem>(x)))) return false;
      }
    }
    return true;
  };

  // N admits an all-central ascending chain of normal subgroups exactly when
  // N lies inside the hypercentre, and then a greedy chain never gets stuck.
  auto reachable = [&](std::size_t target) {
    std::size_t cur = 0;
    while (cur != target) {
      std::size_t next = normals.size();
      for (std::size_t j = 0; j < normals.size(); ++j) {
        if (j == cur) continue;
        if (normals[j].order() <= normals[cur].order()) continue;
        if (!bits[target].contains_all(bits[j])) continue;
        if (!bits[j].contains_all(bits[cur])) continue;
        if (factor_central(j, cur)) {
          next = j;
          break;
        }
      }
      if (next == normals.size()) return false;
      cur = next;
    }
    return true;
  };

  for (std::size_t i = normals.size(); i-- > 0;) {
    if (reachable(i)) return normals[i];
  }
  throw InternalCheckError("trivial subgroup failed the chain test");
}

Subgroup derived_subgroup(const GroupPtr& g) {
  std::vector<Elem> everyone(g->order());
  std::iota(everyone.begin(), everyone.end(), 0);
  return Subgroup::trusted(g, derived_of(g, everyone));
}

std::vector<Subgroup> derived_series(const GroupPtr& g) {
  std::vector<Subgroup> series{whole_subgroup(g)};
  while (true) {
    auto next = derived_of(g, series.back().elements());
    if (next.size() == series.back().elements().size()) break;
    series.push_back(Subgroup::trusted(g, std::move(next)));
  }
  return series;
}

Subgroup p_core(const GroupPtr& g, int p) {
  detail::ElemSet acc(g->order());
  bool first = true;
  for (const auto& sylow : all_sylow(g, p)) {
    auto bits = detail::ElemSet::of(g->order(), sylow.elements());
    if (first) {
      acc = bits;
      first = false;
    } else {
      acc &= bits;
    }
  }
  return Subgroup::trusted(g, acc.to_sorted<Elem>());
}

Subgroup pi_core(const GroupPtr& g, const std::vector<int>& pi,
                 const Budgets& budgets) {
  const auto normals = normal_subgroups(g, budgets);
  // normals are sorted ascending, so the last supported one is the largest
  std::size_t best = 0;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (order_supported_on(normals[i], pi)) best = i;
  }
  const auto bits = detail::ElemSet::of(g->order(), normals[best].elements());
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (order_supported_on(normals[i], pi) &&
        !bits.contains_all(
            detail::ElemSet::of(g->order(), normals[i].elements()))) {
      throw InternalCheckError("pi-subgroups have no unique maximum");
    }
  }
  return normals[best];
}

Subgroup fitting(const GroupPtr& g) {
  std::vector<Elem> acc{0};
  for (int p : g->primes()) {
    acc = product_set(g, acc, p_core(g, p).elements());
  }
  return Subgroup::trusted(g, std::move(acc));
}

Subgroup frattini(const SubgroupLattice& lattice) {
  const auto& g = lattice.group;
  const auto maximals = maximal_subgroups(lattice);
  if (maximals.empty()) return whole_subgroup(g);
  detail::ElemSet acc = detail::ElemSet::of(g->order(), maximals[0].elements());
  for (std::size_t i = 1; i < maximals.size(); ++i) {
    acc &= detail::ElemSet::of(g->order(), maximals[i].elements());
  }
  return Subgroup::trusted(g, acc.to_sorted<Elem>());
}

Subgroup frattini(const GroupPtr& g, const Budgets& budgets) {
  return frattini(all_subgroups(g, budgets));
}

Subgroup f0(const GroupPtr& g) {
  std::vector<Elem> acc{0};
  for (int p : g->primes()) {
    auto sylow = sylow_subgroup(g, p);
    if (is_normal(g, sylow)) {
      acc = product_set(g, acc, sylow.elements());
    }
  }
  return Subgroup::trusted(g, std::move(acc));
}

Subgroup focal_subgroup(const GroupPtr& g, const Subgroup& sylow) {
  check_parent(g, sylow);
  if (sylow.order() == 1) {
    // the trivial subgroup is the Sylow p-subgroup for primes outside the
    // spectrum; its focal subgroup is trivial
    return trivial_subgroup(g);
  }
  int o = sylow.order();
  int p = 0;
  for (int d = 2; d * d <= o; ++d) {
    if (o % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = o;
  int rest = o;
  while (rest % p == 0) rest /= p;
  if (rest != 1) throw NotSylow("subgroup is not a p-group");
  if ((g->order() / sylow.order()) % p == 0) {
    throw NotSylow("subgroup is not a full Sylow subgroup");
  }

  const auto bits = detail::ElemSet::of(g->order(), sylow.elements());
  detail::ElemSet gens(g->order());
  for (Elem x : sylow.elements()) {
    for (int t = 0; t < g->order(); ++t) {
      const Elem y = g->conj(static_cast<Elem>(t), x);
      if (bits.test(y)) gens.set(g->mul(g->inv(x), y));
    }
  }
  return Subgroup::trusted(g, closure_of(g, gens.to_sorted<Elem>()));
}

}  // namespace groupcheck
