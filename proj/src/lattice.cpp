#include "groupcheck/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <utility>

#include "groupcheck/elemset.hpp"

namespace groupcheck {

namespace {

std::atomic<std::uint64_t> g_lattice_builds{0};

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void check_parent(const GroupPtr& g, const Subgroup& s) {
  if (s.parent().get() != g.get()) {
    throw NotASubgroup("subgroup belongs to a different group");
  }
}

bool elements_less(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Closure of a generator list, as a sorted element vector.
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

// Derived subgroup of a subgroup given by its element list.
std::vector<Elem> derived_of(const GroupPtr& g, const std::vector<Elem>& elems) {
  detail::ElemSet comms(g->order());
  for (Elem a : elems) {
    for (Elem b : elems) comms.set(g->comm(a, b));
  }
  return closure_of(g, comms.to_sorted<Elem>());
}

bool soluble_elements(const GroupPtr& g, std::vector<Elem> cur) {
  while (cur.size() > 1) {
    auto next = derived_of(g, cur);
    if (next.size() == cur.size()) return false;
    cur = std::move(next);
  }
  return true;
}

std::vector<Elem> normalizer_elements(const GroupPtr& g,
                                      const std::vector<Elem>& elems,
                                      const detail::ElemSet& bits) {
  std::vector<Elem> out;
  for (int x = 0; x < g->order(); ++x) {
    bool normalizes = true;
    for (Elem h : elems) {
      if (!bits.test(g->conj(static_cast<Elem>(x), h))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) out.push_back(static_cast<Elem>(x));
  }
  return out;
}

struct SubgroupAccumulator {
  explicit SubgroupAccumulator(std::int64_t cap) : cap_(cap) {}

  struct Entry {
    std::vector<Elem> elems;
    std::vector<Elem> gens;
  };

  bool add(std::vector<Elem> elems, std::vector<Elem> gens) {
    auto it = index_.find(elems);
    if (it != index_.end()) return false;
    if (static_cast<std::int64_t>(entries_.size()) >= cap_) {
      throw BudgetExceeded("subgroup enumeration over cap", cap_,
                           static_cast<std::int64_t>(entries_.size()) + 1);
    }
    index_.emplace(elems, entries_.size());
    entries_.push_back({std::move(elems), std::move(gens)});
    return true;
  }

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::int64_t cap_;
  std::map<std::vector<Elem>, std::size_t> index_;
  std::vector<Entry> entries_;
};

// Cyclic extension: repeatedly extend each known subgroup H by a normalizing
// element whose coset order is prime. Finds every soluble subgroup.
void cyclic_extension(const GroupPtr& g, SubgroupAccumulator& acc,
                      int only_prime) {
  const int n = g->order();
  for (std::size_t head = 0; head < acc.entries().size(); ++head) {
    const auto elems = acc.entries()[head].elems;
    const auto gens = acc.entries()[head].gens;
    const auto bits = detail::ElemSet::of(n, elems);
    for (Elem x : normalizer_elements(g, elems, bits)) {
      if (bits.test(x)) continue;
      int t = 1;
      Elem power = x;
      while (!bits.test(power)) {
        power = g->mul(power, x);
        ++t;
      }
      if (!is_prime(t)) continue;
      if (only_prime != 0 && t != only_prime) continue;
      detail::ElemSet extended = bits;
      Elem xi = x;
      for (int i = 1; i < t; ++i) {
        for (Elem h : elems) extended.set(g->mul(h, xi));
        xi = g->mul(xi, x);
      }
      auto new_elems = extended.to_sorted<Elem>();
      if (new_elems.size() != elems.size() * static_cast<std::size_t>(t)) {
        throw InternalCheckError("cyclic extension produced a wrong order");
      }
      auto new_gens = gens;
      new_gens.push_back(x);
      acc.add(std::move(new_elems), std::move(new_gens));
    }
  }
}

}  // namespace

std::optional<std::size_t> SubgroupLattice::index_of(
    const std::vector<Elem>& elements) const {
  auto it = std::lower_bound(
      subgroups.begin(), subgroups.end(), elements,
      [](const Subgroup& s, const std::vector<Elem>& e) {
        return elements_less(s.elements(), e);
      });
  if (it == subgroups.end() || it->elements() != elements) return std::nullopt;
  return static_cast<std::size_t>(it - subgroups.begin());
}

SubgroupLattice all_subgroups(const GroupPtr& g, const Budgets& budgets) {
  const int n = g->order();
  if (n > budgets.lattice_order_cap) {
    throw BudgetExceeded("lattice enumeration over order cap",
                         budgets.lattice_order_cap, n);
  }
  g_lattice_builds.fetch_add(1, std::memory_order_relaxed);

  SubgroupAccumulator acc(budgets.lattice_subgroup_cap);
  acc.add({0}, {});
  cyclic_extension(g, acc, 0);

  std::vector<Elem> everyone(n);
  std::iota(everyone.begin(), everyone.end(), 0);
  if (!soluble_elements(g, everyone)) {
    // Insoluble subgroups are joins <H, x> of already-found subgroups, so a
    // sweep over the growing list reaches a fixpoint containing everything.
    for (std::size_t head = 0; head < acc.entries().size(); ++head) {
      const auto elems = acc.entries()[head].elems;
      const auto gens = acc.entries()[head].gens;
      const auto bits = detail::ElemSet::of(n, elems);
      for (int x = 0; x < n; ++x) {
        if (bits.test(x)) continue;
        auto joined_gens = gens;
        joined_gens.push_back(static_cast<Elem>(x));
        auto joined = closure_of(g, joined_gens);
        acc.add(std::move(joined), std::move(joined_gens));
      }
    }
  }

  SubgroupLattice lattice;
  lattice.group = g;
  lattice.subgroups.reserve(acc.entries().size());
  for (const auto& entry : acc.entries()) {
    lattice.subgroups.push_back(Subgroup::trusted(g, entry.elems));
  }
  std::sort(lattice.subgroups.begin(), lattice.subgroups.end(),
            [](const Subgroup& a, const Subgroup& b) {
              return elements_less(a.elements(), b.elements());
            });
  if (!lattice.subgroups.back().is_whole()) {
    throw InternalCheckError("subgroup enumeration missed the whole group");
  }

  std::vector<char> assigned(lattice.subgroups.size(), 0);
  for (std::size_t i = 0; i < lattice.subgroups.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> orbit;
    for (int x = 0; x < n; ++x) {
      auto conj = conjugate_subgroup(g, lattice.subgroups[i],
                                     static_cast<Elem>(x));
      auto idx = lattice.index_of(conj.elements());
      if (!idx) throw InternalCheckError("conjugate missing from lattice");
      if (!assigned[*idx]) {
        assigned[*idx] = 1;
        orbit.push_back(*idx);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    lattice.conjugacy_classes.push_back(std::move(orbit));
  }
  std::sort(lattice.conjugacy_classes.begin(), lattice.conjugacy_classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (const auto& cls : lattice.conjugacy_classes) {
    if (cls.size() == 1) lattice.normal_indices.push_back(cls.front());
  }
  return lattice;
}

std::vector<Subgroup> all_p_subgroups(const GroupPtr& g, int p,
                                      const Budgets& budgets) {
  if (!is_prime(p)) throw GroupError("p must be prime");
  SubgroupAccumulator acc(budgets.lattice_subgroup_cap);
  acc.add({0}, {});
  cyclic_extension(g, acc, p);
  std::vector<Subgroup> out;
  out.reserve(acc.entries().size());
  for (const auto& entry : acc.entries()) {
    out.push_back(Subgroup::trusted(g, entry.elems));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return elements_less(a.elements(), b.elements());
  });
  return out;
}

bool is_normal(const GroupPtr& g, const Subgroup& s) {
  check_parent(g, s);
  const auto bits = detail::ElemSet::of(g->order(), s.elements());
  for (int x = 0; x < g->order(); ++x) {
    for (Elem h : s.elements()) {
      if (!bits.test(g->conj(static_cast<Elem>(x), h))) return false;
    }
  }
  return true;
}

namespace {

// Normal closure of the subgroup generated by seed_gens inside the subgroup
// with element list ambient (which must contain the seeds).
std::vector<Elem> normal_closure_in(const GroupPtr& g,
                                    const std::vector<Elem>& ambient,
                                    const std::vector<Elem>& seed_gens) {
  detail::ElemSet gen_bits(g->order());
  for (Elem k : ambient) {
    for (Elem a : seed_gens) gen_bits.set(g->conj(k, a));
  }
  return closure_of(g, gen_bits.to_sorted<Elem>());
}

}  // namespace

bool is_subnormal(const GroupPtr& g, const Subgroup& s) {
  check_parent(g, s);
  const auto seed = small_generators(g, s.elements());
  std::vector<Elem> level(g->order());
  std::iota(level.begin(), level.end(), 0);
  while (true) {
    if (level == s.elements()) return true;
    auto next = normal_closure_in(g, level, seed);
    if (next.size() == level.size()) return false;
    level = std::move(next);
  }
}

Subgroup normal_closure(const GroupPtr& g, const Subgroup& s) {
  check_parent(g, s);
  std::vector<Elem> everyone(g->order());
  std::iota(everyone.begin(), everyone.end(), 0);
  return Subgroup::trusted(
      g, normal_closure_in(g, everyone, small_generators(g, s.elements())));
}

Subgroup normal_core(const GroupPtr& g, const Subgroup& s) {
  check_parent(g, s);
  detail::ElemSet acc = detail::ElemSet::of(g->order(), s.elements());
  for (int x = 0; x < g->order(); ++x) {
    detail::ElemSet conj(g->order());
    for (Elem h : s.elements()) conj.set(g->conj(static_cast<Elem>(x), h));
    acc &= conj;
  }
  return Subgroup::trusted(g, acc.to_sorted<Elem>());
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g,
                                       const Budgets& budgets) {
  const int n = g->order();

  std::vector<Elem> everyone(n);
  std::iota(everyone.begin(), everyone.end(), 0);
  std::map<std::vector<Elem>, std::vector<Elem>> atom_by_cyclic;
  for (int x = 1; x < n; ++x) {
    auto cyc = closure_of(g, {static_cast<Elem>(x)});
    if (atom_by_cyclic.count(cyc)) continue;
    atom_by_cyclic.emplace(std::move(cyc),
                           normal_closure_in(g, everyone,
                                             {static_cast<Elem>(x)}));
  }
  std::vector<std::vector<Elem>> atoms;
  for (auto& [cyc, atom] : atom_by_cyclic) atoms.push_back(atom);
  std::sort(atoms.begin(), atoms.end(), elements_less);
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());

  // Every normal subgroup is the product of the closures ncl(<x>) over its
  // elements, so closing {1} under products with the atoms finds them all.
  std::map<std::vector<Elem>, std::size_t> index;
  std::vector<std::vector<Elem>> found{{0}};
  index.emplace(found.front(), 0);
  for (std::size_t head = 0; head < found.size(); ++head) {
    const auto current = found[head];
    for (const auto& atom : atoms) {
      auto prod = product_set(g, current, atom);
      if (index.count(prod)) continue;
      if (static_cast<std::int64_t>(found.size()) >=
          budgets.lattice_subgroup_cap) {
        throw BudgetExceeded("normal subgroup enumeration over cap",
                             budgets.lattice_subgroup_cap,
                             static_cast<std::int64_t>(found.size()) + 1);
      }
      index.emplace(prod, found.size());
      found.push_back(std::move(prod));
    }
  }

  std::sort(found.begin(), found.end(), elements_less);
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& elems : found) {
    out.push_back(Subgroup::trusted(g, std::move(elems)));
  }
  return out;
}

std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lattice) {
  const int n = lattice.group->order();
  const auto& subs = lattice.subgroups;
  std::vector<detail::ElemSet> bits;
  bits.reserve(subs.size());
  for (const auto& s : subs) {
    bits.push_back(detail::ElemSet::of(n, s.elements()));
  }
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].is_whole()) continue;
    bool maximal = true;
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      if (subs[j].is_whole()) continue;
      if (subs[j].order() > subs[i].order() &&
          bits[j].contains_all(bits[i])) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(subs[i]);
  }
  return out;
}

std::vector<Subgroup> maximal_subgroups(const GroupPtr& g,
                                        const Budgets& budgets) {
  return maximal_subgroups(all_subgroups(g, budgets));
}

std::vector<Subgroup> minimal_normal_subgroups(const GroupPtr& g,
                                               const Budgets& budgets) {
  const auto normals = normal_subgroups(g, budgets);
  const int n = g->order();
  std::vector<detail::ElemSet> bits;
  bits.reserve(normals.size());
  for (const auto& s : normals) {
    bits.push_back(detail::ElemSet::of(n, s.elements()));
  }
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].is_trivial()) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < normals.size(); ++j) {
      if (j == i || normals[j].is_trivial()) continue;
      if (normals[j].order() < normals[i].order() &&
          bits[i].contains_all(bits[j])) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(normals[i]);
  }
  return out;
}

std::vector<ChiefFactor> chief_series(const GroupPtr& g,
                                      const Budgets& budgets) {
  const auto normals = normal_subgroups(g, budgets);
  const int n = g->order();
  std::vector<detail::ElemSet> bits;
  bits.reserve(normals.size());
  for (const auto& s : normals) {
    bits.push_back(detail::ElemSet::of(n, s.elements()));
  }

  std::vector<ChiefFactor> series;
  std::size_t cur = 0;  // normals[0] is the trivial subgroup
  while (normals[cur].order() < n) {
    std::vector<std::size_t> covering;
    for (std::size_t j = 0; j < normals.size(); ++j) {
      if (normals[j].order() > normals[cur].order() &&
          bits[j].contains_all(bits[cur])) {
        covering.push_back(j);
      }
    }
    std::size_t pick = normals.size();
    for (std::size_t j : covering) {
      bool minimal = true;
      for (std::size_t l : covering) {
        if (l != j && normals[l].order() < normals[j].order() &&
            bits[j].contains_all(bits[l])) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        pick = j;
        break;
      }
    }
    if (pick == normals.size()) {
      throw InternalCheckError("chief series found no covering subgroup");
    }

    ChiefFactor factor{normals[cur], normals[pick],
                       normals[pick].order() / normals[cur].order(), 0, false,
                       true};
    int ratio = factor.order;
    int p = 0;
    for (int d = 2; d * d <= ratio; ++d) {
      if (ratio % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) p = ratio;
    int power = ratio;
    while (power % p == 0) power /= p;
    if (power == 1) {
      for (Elem a : normals[pick].elements()) {
        if (!bits[cur].test(g->power(a, p))) {
          throw InternalCheckError("prime-power chief factor has exponent > p");
        }
        for (Elem b : normals[pick].elements()) {
          if (!bits[cur].test(g->comm(a, b))) {
            throw InternalCheckError("prime-power chief factor is nonabelian");
          }
        }
      }
      factor.prime = p;
      factor.elementary_abelian = true;
    }
    for (Elem m : normals[pick].elements()) {
      for (int x = 0; x < n && factor.central; ++x) {
        if (!bits[cur].test(g->comm(m, static_cast<Elem>(x)))) {
          factor.central = false;
        }
      }
      if (!factor.central) break;
    }
    series.push_back(std::move(factor));
    cur = pick;
  }
  return series;
}

std::vector<Elem> small_generators(const GroupPtr& g,
                                   const std::vector<Elem>& elements) {
  std::vector<Elem> gens;
  detail::ElemSet cur(g->order());
  cur.set(0);
  std::size_t have = 1;
  for (Elem e : elements) {
    if (cur.test(e)) continue;
    gens.push_back(e);
    auto closed = closure_of(g, gens);
    have = closed.size();
    cur = detail::ElemSet::of(g->order(), closed);
    if (have == elements.size()) break;
  }
  return gens;
}

std::uint64_t lattice_build_count() {
  return g_lattice_builds.load(std::memory_order_relaxed);
}

}  // namespace groupcheck
