#include "groupcheck/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "groupcheck/elemset.hpp"

namespace groupcheck {

namespace {

std::vector<PrimePower> factorize(int n) {
  std::vector<PrimePower> out;
  int m = n;
  for (int p = 2; static_cast<long long>(p) * p <= m; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

std::uint64_t hash_table(int n, const std::vector<Elem>& table) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(n));
  for (Elem e : table) mix(e);
  return h;
}

void check_parent(const GroupPtr& g, const Subgroup& s) {
  if (s.parent().get() != g.get()) {
    throw NotASubgroup("subgroup belongs to a different group");
  }
}

}  // namespace

GroupPtr make_group(std::vector<Elem> table, int n, std::string name,
                    const Budgets& budgets) {
  if (n <= 0) throw BadShape("group order must be positive");
  if (n > budgets.construction_order_cap) {
    throw BudgetExceeded("group order over construction cap",
                         budgets.construction_order_cap, n);
  }
  if (table.size() != static_cast<std::size_t>(n) * n) {
    throw BadShape("multiplication table is not square");
  }
  for (Elem e : table) {
    if (e >= n) throw BadShape("table entry out of range");
  }

  auto at = [&table, n](int a, int b) -> Elem& {
    return table[static_cast<std::size_t>(a) * n + b];
  };

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (at(e, a) != a || at(a, e) != a) ok = false;
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw NotAGroup("no two-sided identity");

  if (identity != 0) {
    std::vector<Elem> relabel(n);
    relabel[identity] = 0;
    for (int x = 0; x < n; ++x) {
      if (x == identity) continue;
      relabel[x] = static_cast<Elem>(x < identity ? x + 1 : x);
    }
    std::vector<Elem> remapped(table.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        remapped[static_cast<std::size_t>(relabel[a]) * n + relabel[b]] =
            relabel[at(a, b)];
      }
    }
    table = std::move(remapped);
  }

  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) seen[at(a, b)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
      throw NotAGroup("row " + std::to_string(a) + " is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) seen[at(b, a)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
      throw NotAGroup("column " + std::to_string(a) + " is not a permutation");
    }
  }

  std::vector<Elem> inverses(n);
  for (int a = 0; a < n; ++a) {
    int found = -1;
    for (int b = 0; b < n; ++b) {
      if (at(a, b) == 0) {
        found = b;
        break;
      }
    }
    if (found < 0 || at(found, a) != 0) {
      throw NotAGroup("element " + std::to_string(a) +
                      " has no two-sided inverse");
    }
    inverses[a] = static_cast<Elem>(found);
  }

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Elem ab = at(a, b);
      for (int c = 0; c < n; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          throw NotAGroup("associativity fails at (" + std::to_string(a) +
                          ", " + std::to_string(b) + ", " + std::to_string(c) +
                          ")");
        }
      }
    }
  }

  bool abelian = true;
  for (int a = 0; a < n && abelian; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (at(a, b) != at(b, a)) {
        abelian = false;
        break;
      }
    }
  }

  auto g = std::shared_ptr<Group>(new Group());
  g->order_ = n;
  g->table_ = std::move(table);
  g->inverses_ = std::move(inverses);
  g->primes_ = factorize(n);
  g->abelian_ = abelian;
  g->name_ = std::move(name);
  g->hash_ = hash_table(n, g->table_);
  return g;
}

Elem Group::power(Elem a, long long k) const {
  if (k < 0) return power(inv(a), -k);
  Elem result = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int Group::element_order(Elem a) const {
  int n = 1;
  Elem x = a;
  while (x != 0) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

std::vector<int> Group::primes() const {
  std::vector<int> out;
  out.reserve(primes_.size());
  for (const auto& pp : primes_) out.push_back(pp.prime);
  return out;
}

GroupPtr group_from_table(const std::vector<std::vector<int>>& rows,
                          std::string name, const Budgets& budgets) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw BadShape("empty table");
  std::vector<Elem> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw BadShape("table is not square");
    }
    for (int v : row) {
      if (v < 0 || v >= n) throw BadShape("table entry out of range");
      flat.push_back(static_cast<Elem>(v));
    }
  }
  return make_group(std::move(flat), n, std::move(name), budgets);
}

GroupPtr group_from_permutations(const std::vector<std::vector<int>>& gens,
                                 std::string name, const Budgets& budgets) {
  if (gens.empty()) {
    return make_group({0}, 1, std::move(name), budgets);
  }
  const std::size_t degree = gens[0].size();
  if (degree == 0) throw NotAPermutation("empty permutation");
  for (const auto& p : gens) {
    if (p.size() != degree) {
      throw NotAPermutation("generators act on different point counts");
    }
    std::vector<char> hit(degree, 0);
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree || hit[v]) {
        throw NotAPermutation("image list is not a bijection");
      }
      hit[v] = 1;
    }
  }

  using Perm = std::vector<int>;
  auto compose = [degree](const Perm& a, const Perm& b) {
    Perm c(degree);
    for (std::size_t i = 0; i < degree; ++i) c[i] = a[b[i]];
    return c;
  };

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);

  std::vector<Perm> elems{id};
  std::map<Perm, Elem> index{{id, 0}};
  std::vector<Perm> layer{id};
  while (!layer.empty()) {
    std::set<Perm> fresh;
    for (const auto& x : layer) {
      for (const auto& gen : gens) {
        Perm y = compose(x, gen);
        if (!index.count(y)) fresh.insert(std::move(y));
      }
    }
    layer.clear();
    for (const auto& y : fresh) {
      if (index.count(y)) continue;
      if (static_cast<int>(elems.size()) >= budgets.construction_order_cap) {
        throw BudgetExceeded("permutation closure over construction cap",
                             budgets.construction_order_cap,
                             static_cast<int>(elems.size()) + 1);
      }
      index.emplace(y, static_cast<Elem>(elems.size()));
      elems.push_back(y);
      layer.push_back(y);
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * n + b] =
          index.at(compose(elems[a], elems[b]));
    }
  }
  return make_group(std::move(table), n, std::move(name), budgets);
}

GroupPtr cyclic_group(int n, std::string name, const Budgets& budgets) {
  if (n <= 0) throw BadShape("cyclic group order must be positive");
  if (name.empty()) name = "C" + std::to_string(n);
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * n + b] =
          static_cast<Elem>((a + b) % n);
    }
  }
  return make_group(std::move(table), n, std::move(name), budgets);
}

GroupPtr direct_product(const GroupPtr& lhs, const GroupPtr& rhs,
                        std::string name, const Budgets& budgets) {
  const long long n =
      static_cast<long long>(lhs->order()) * rhs->order();
  if (n > budgets.construction_order_cap) {
    throw BudgetExceeded("direct product over construction cap",
                         budgets.construction_order_cap, n);
  }
  if (name.empty()) name = lhs->name() + "x" + rhs->name();
  const int nr = rhs->order();
  const int total = static_cast<int>(n);
  std::vector<Elem> table(static_cast<std::size_t>(total) * total);
  for (int a = 0; a < total; ++a) {
    const Elem a1 = static_cast<Elem>(a / nr), a2 = static_cast<Elem>(a % nr);
    for (int b = 0; b < total; ++b) {
      const Elem b1 = static_cast<Elem>(b / nr),
                 b2 = static_cast<Elem>(b % nr);
      table[static_cast<std::size_t>(a) * total + b] = static_cast<Elem>(
          lhs->mul(a1, b1) * nr + rhs->mul(a2, b2));
    }
  }
  return make_group(std::move(table), total, std::move(name), budgets);
}

GroupPtr semidirect_product_cyclic(int n, int m, int k, std::string name,
                                   const Budgets& budgets) {
  if (n <= 0 || m <= 0) throw BadShape("factor orders must be positive");
  k = ((k % n) + n) % n;
  if (std::gcd(k, n) != 1) {
    throw BadAction("raising to the " + std::to_string(k) +
                    "-th power is not invertible mod " + std::to_string(n));
  }
  std::vector<int> kpow(m + 1);
  kpow[0] = 1 % n;
  for (int j = 1; j <= m; ++j) kpow[j] = static_cast<int>(
      (static_cast<long long>(kpow[j - 1]) * k) % n);
  if (kpow[m] != 1 % n) {
    throw BadAction("action order does not divide " + std::to_string(m));
  }
  const long long total = static_cast<long long>(n) * m;
  if (total > budgets.construction_order_cap) {
    throw BudgetExceeded("semidirect product over construction cap",
                         budgets.construction_order_cap, total);
  }
  if (name.empty()) {
    name = "sdp(" + std::to_string(n) + "," + std::to_string(m) + "," +
           std::to_string(k) + ")";
  }
  const int t = static_cast<int>(total);
  std::vector<Elem> table(static_cast<std::size_t>(t) * t);
  for (int i1 = 0; i1 < n; ++i1) {
    for (int j1 = 0; j1 < m; ++j1) {
      const int a = i1 * m + j1;
      for (int i2 = 0; i2 < n; ++i2) {
        for (int j2 = 0; j2 < m; ++j2) {
          const int b = i2 * m + j2;
          const int i = static_cast<int>(
              (i1 + static_cast<long long>(i2) * kpow[j1]) % n);
          const int j = (j1 + j2) % m;
          table[static_cast<std::size_t>(a) * t + b] =
              static_cast<Elem>(i * m + j);
        }
      }
    }
  }
  return make_group(std::move(table), t, std::move(name), budgets);
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  if (!parent_) throw NotASubgroup("null parent group");
  if (elements_.empty()) throw NotASubgroup("empty element set");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  if (elements_.back() >= parent_->order()) {
    throw NotASubgroup("element out of range");
  }
  if (elements_.front() != 0) throw NotASubgroup("missing identity");
  const auto bits = detail::ElemSet::of(parent_->order(), elements_);
  for (Elem a : elements_) {
    for (Elem b : elements_) {
      if (!bits.test(parent_->mul(a, b))) {
        throw NotASubgroup("not closed under multiplication");
      }
    }
  }
}

Subgroup Subgroup::trusted(GroupPtr parent, std::vector<Elem> sorted_elements) {
  return Subgroup(Trusted{}, std::move(parent), std::move(sorted_elements));
}

bool Subgroup::contains(Elem x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  return Subgroup::trusted(g, {0});
}

Subgroup whole_subgroup(const GroupPtr& g) {
  std::vector<Elem> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup::trusted(g, std::move(all));
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<Elem>& gens) {
  for (Elem x : gens) {
    if (x >= g->order()) throw NotASubgroup("generator out of range");
  }
  detail::ElemSet bits(g->order());
  bits.set(0);
  std::vector<Elem> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Elem x = queue[head];
    for (Elem gen : gens) {
      const Elem y = g->mul(x, gen);
      if (!bits.test(y)) {
        bits.set(y);
        queue.push_back(y);
      }
    }
  }
  return Subgroup::trusted(g, bits.to_sorted<Elem>());
}

Subgroup centralizer(const GroupPtr& g, const Subgroup& s) {
  check_parent(g, s);
  std::vector<Elem> out;
  for (int x = 0; x < g->order(); ++x) {
    bool central = true;
    for (Elem h : s.elements()) {
      if (g->mul(static_cast<Elem>(x), h) != g->mul(h, static_cast<Elem>(x))) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(static_cast<Elem>(x));
  }
  return Subgroup::trusted(g, std::move(out));
}

Subgroup normalizer(const GroupPtr& g, const Subgroup& s) {
  check_parent(g, s);
  const auto bits = detail::ElemSet::of(g->order(), s.elements());
  std::vector<Elem> out;
  for (int x = 0; x < g->order(); ++x) {
    bool normalizes = true;
    for (Elem h : s.elements()) {
      if (!bits.test(g->conj(static_cast<Elem>(x), h))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) out.push_back(static_cast<Elem>(x));
  }
  return Subgroup::trusted(g, std::move(out));
}

Subgroup conjugate_subgroup(const GroupPtr& g, const Subgroup& s, Elem x) {
  check_parent(g, s);
  if (x >= g->order()) throw NotASubgroup("conjugating element out of range");
  std::vector<Elem> out;
  out.reserve(s.elements().size());
  for (Elem h : s.elements()) out.push_back(g->conj(x, h));
  std::sort(out.begin(), out.end());
  return Subgroup::trusted(g, std::move(out));
}

std::vector<Elem> product_set(const GroupPtr& g, const std::vector<Elem>& lhs,
                              const std::vector<Elem>& rhs) {
  detail::ElemSet bits(g->order());
  for (Elem a : lhs) {
    for (Elem b : rhs) bits.set(g->mul(a, b));
  }
  return bits.to_sorted<Elem>();
}

QuotientResult quotient(const GroupPtr& g, const Subgroup& n) {
  check_parent(g, n);
  const auto bits = detail::ElemSet::of(g->order(), n.elements());
  for (int x = 0; x < g->order(); ++x) {
    for (Elem h : n.elements()) {
      if (!bits.test(g->conj(static_cast<Elem>(x), h))) {
        throw NotNormal("subgroup of order " + std::to_string(n.order()) +
                        " is not normal");
      }
    }
  }

  const int order = g->order();
  std::vector<int> coset(order, -1);
  std::vector<Elem> reps;
  for (int x = 0; x < order; ++x) {
    if (coset[x] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<Elem>(x));
    for (Elem h : n.elements()) {
      coset[g->mul(static_cast<Elem>(x), h)] = id;
    }
  }

  const int q = static_cast<int>(reps.size());
  std::vector<Elem> table(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      table[static_cast<std::size_t>(a) * q + b] =
          static_cast<Elem>(coset[g->mul(reps[a], reps[b])]);
    }
  }
  QuotientResult result;
  result.group = make_group(std::move(table), q,
                            g->name() + "/" + std::to_string(n.order()), {});
  result.projection.resize(order);
  for (int x = 0; x < order; ++x) {
    result.projection[x] = static_cast<Elem>(coset[x]);
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (result.projection[g->mul(static_cast<Elem>(a), static_cast<Elem>(
                                       b))] !=
          result.group->mul(result.projection[a], result.projection[b])) {
        throw InternalCheckError("quotient projection is not a homomorphism");
      }
    }
  }
  return result;
}

SubgroupGroup as_group(const Subgroup& s) {
  const auto& parent = s.parent();
  const auto& elems = s.elements();
  const int k = s.order();
  std::vector<int> local(parent->order(), -1);
  for (int i = 0; i < k; ++i) local[elems[i]] = i;
  std::vector<Elem> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      table[static_cast<std::size_t>(i) * k + j] =
          static_cast<Elem>(local[parent->mul(elems[i], elems[j])]);
    }
  }
  SubgroupGroup out;
  out.group = make_group(std::move(table), k,
                         parent->name() + "[" + std::to_string(k) + "]", {});
  out.to_parent = elems;
  return out;
}

}  // namespace groupcheck
