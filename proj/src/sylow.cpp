#include "groupcheck/sylow.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "groupcheck/characteristic.hpp"
#include "groupcheck/elemset.hpp"
#include "groupcheck/lattice.hpp"

namespace groupcheck {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_prime(int p) {
  if (!is_prime(p)) throw GroupError("p must be prime");
}

int p_part(int n, int p) {
  int part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

}  // namespace

Subgroup sylow_subgroup(const GroupPtr& g, int p) {
  require_prime(p);
  const int target = p_part(g->order(), p);
  if (target == 1) return trivial_subgroup(g);

  Elem seed = 0;
  for (int x = 1; x < g->order(); ++x) {
    if (g->element_order(static_cast<Elem>(x)) == p) {
      seed = static_cast<Elem>(x);
      break;
    }
  }
  if (seed == 0) throw InternalCheckError("no element of order p found");

  auto current = generated_subgroup(g, {seed});
  while (current.order() < target) {
    const auto norm = normalizer(g, current);
    const auto bits =
        detail::ElemSet::of(g->order(), current.elements());
    Elem pick = 0;
    bool found = false;
    for (Elem y : norm.elements()) {
      if (bits.test(y)) continue;
      if (bits.test(g->power(y, p))) {
        pick = y;
        found = true;
        break;
      }
    }
    if (!found) {
      throw InternalCheckError("normalizer ascent stalled below Sylow order");
    }
    detail::ElemSet extended = bits;
    Elem yi = pick;
    for (int i = 1; i < p; ++i) {
      for (Elem h : current.elements()) extended.set(g->mul(h, yi));
      yi = g->mul(yi, pick);
    }
    current = Subgroup::trusted(g, extended.to_sorted<Elem>());
  }
  return current;
}

std::vector<Subgroup> all_sylow(const GroupPtr& g, int p) {
  const auto base = sylow_subgroup(g, p);
  std::map<std::vector<Elem>, bool> seen;
  seen.emplace(base.elements(), true);
  for (int x = 0; x < g->order(); ++x) {
    seen.emplace(conjugate_subgroup(g, base, static_cast<Elem>(x)).elements(),
                 true);
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& [elems, unused] : seen) {
    out.push_back(Subgroup::trusted(g, elems));
  }
  if (p_part(g->order(), p) > 1 &&
      static_cast<int>(out.size()) % p != 1 % p) {
    throw InternalCheckError("Sylow count is not 1 mod p");
  }
  if (g->order() % static_cast<int>(out.size()) != 0) {
    throw InternalCheckError("Sylow count does not divide the group order");
  }
  return out;
}

std::optional<SylowBasis> sylow_basis(const GroupPtr& g,
                                      const Budgets& budgets) {
  const auto primes = g->primes();
  std::vector<std::vector<Subgroup>> classes;
  classes.reserve(primes.size());
  for (int p : primes) classes.push_back(all_sylow(g, p));

  std::vector<std::size_t> choice(primes.size(), 0);
  std::vector<const Subgroup*> picked;
  std::int64_t nodes = 0;

  // PQ = QP as sets; for coprime subgroups the product size alone is always
  // |P||Q|, so the two-sided comparison is the real test.
  auto permutable = [&](const Subgroup& a, const Subgroup& b) {
    return product_set(g, a.elements(), b.elements()) ==
           product_set(g, b.elements(), a.elements());
  };

  // depth-first over one Sylow class per prime, primes ascending
  std::size_t depth = 0;
  while (true) {
    if (depth == primes.size()) {
      SylowBasis basis;
      basis.primes = primes;
      for (const auto* s : picked) basis.members.push_back(*s);
      std::vector<Elem> prod{0};
      for (const auto& m : basis.members) {
        prod = product_set(g, prod, m.elements());
      }
      if (static_cast<int>(prod.size()) != g->order()) {
        throw InternalCheckError("Sylow basis does not multiply out to G");
      }
      return basis;
    }
    bool descended = false;
    for (std::size_t i = choice[depth]; i < classes[depth].size(); ++i) {
      if (++nodes > budgets.sylow_basis_node_cap) {
        throw BudgetExceeded("Sylow basis search over node cap",
                             budgets.sylow_basis_node_cap, nodes);
      }
      const auto& cand = classes[depth][i];
      bool ok = true;
      for (const auto* prev : picked) {
        if (!permutable(*prev, cand)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        choice[depth] = i + 1;
        picked.push_back(&cand);
        ++depth;
        descended = true;
        break;
      }
    }
    if (descended) continue;
    if (depth == 0) return std::nullopt;
    choice[depth] = 0;
    --depth;
    picked.pop_back();
  }
}

std::optional<Subgroup> hall_subgroup(const GroupPtr& g,
                                      const std::vector<int>& pi,
                                      const Budgets& budgets) {
  for (int p : pi) require_prime(p);
  auto basis = sylow_basis(g, budgets);
  if (!basis) return std::nullopt;
  std::vector<Elem> acc{0};
  int expected = 1;
  for (std::size_t i = 0; i < basis->primes.size(); ++i) {
    if (std::find(pi.begin(), pi.end(), basis->primes[i]) == pi.end()) {
      continue;
    }
    acc = product_set(g, acc, basis->members[i].elements());
    expected *= basis->members[i].order();
  }
  if (static_cast<int>(acc.size()) != expected) {
    throw InternalCheckError("Hall product has the wrong order");
  }
  return Subgroup::trusted(g, std::move(acc));
}

bool is_nilpotent(const GroupPtr& g) {
  for (int p : g->primes()) {
    if (!is_normal(g, sylow_subgroup(g, p))) return false;
  }
  return true;
}

bool is_soluble(const GroupPtr& g) {
  return derived_series(g).back().is_trivial();
}

bool is_p_soluble(const GroupPtr& g, int p, const Budgets& budgets) {
  require_prime(p);
  for (const auto& factor : chief_series(g, budgets)) {
    const bool p_factor = factor.prime == p;
    const bool p_prime_factor = factor.order % p != 0;
    if (!p_factor && !p_prime_factor) return false;
  }
  return true;
}

bool is_p_nilpotent(const GroupPtr& g, int p, const Budgets& budgets) {
  require_prime(p);
  const int complement_order = g->order() / p_part(g->order(), p);
  for (const auto& n : normal_subgroups(g, budgets)) {
    if (n.order() == complement_order) return true;
  }
  return false;
}

bool is_p_decomposable(const GroupPtr& g, int p, const Budgets& budgets) {
  require_prime(p);
  const auto core = p_core(g, p);
  std::vector<int> others;
  for (int q : g->primes()) {
    if (q != p) others.push_back(q);
  }
  const auto cocore = pi_core(g, others, budgets);
  return static_cast<long long>(core.order()) * cocore.order() == g->order();
}

namespace {

bool dispersion_descend(const GroupPtr& original, const GroupPtr& current,
                        const std::vector<Elem>& projection,
                        std::vector<int> remaining,
                        std::vector<int>& ordering,
                        std::vector<Subgroup>& tower) {
  if (remaining.empty()) return true;
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    const int p = remaining[i];
    const auto sylow = sylow_subgroup(current, p);
    if (!is_normal(current, sylow)) continue;

    const auto bits =
        detail::ElemSet::of(current->order(), sylow.elements());
    std::vector<Elem> preimage;
    for (int x = 0; x < original->order(); ++x) {
      if (bits.test(projection[x])) preimage.push_back(static_cast<Elem>(x));
    }
    ordering.push_back(p);
    tower.push_back(Subgroup::trusted(original, std::move(preimage)));

    auto next = quotient(current, sylow);
    std::vector<Elem> composed(original->order());
    for (int x = 0; x < original->order(); ++x) {
      composed[x] = next.projection[projection[x]];
    }
    auto rest = remaining;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (dispersion_descend(original, next.group, composed, std::move(rest),
                           ordering, tower)) {
      return true;
    }
    ordering.pop_back();
    tower.pop_back();
  }
  return false;
}

}  // namespace

std::optional<DispersionOrdering> dispersion_ordering(const GroupPtr& g,
                                                      const Budgets& budgets) {
  const auto primes = g->primes();
  if (static_cast<int>(primes.size()) > budgets.dispersion_prime_cap) {
    throw TooManyPrimes("prime spectrum larger than the ordering cap");
  }
  std::vector<Elem> identity_projection(g->order());
  std::iota(identity_projection.begin(), identity_projection.end(), 0);
  DispersionOrdering result;
  if (!dispersion_descend(g, g, identity_projection, primes, result.primes,
                          result.tower)) {
    return std::nullopt;
  }
  return result;
}

}  // namespace groupcheck
