#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "groupcheck/budgets.hpp"
#include "groupcheck/errors.hpp"

namespace groupcheck {

// Element of a group, an index into its multiplication table.
using Elem = std::uint16_t;

struct PrimePower {
  int prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// A finite group stored as its full multiplication table. Element 0 is
// always the identity (constructors relabel when necessary). Instances are
// immutable and shared through GroupPtr.
class Group {
 public:
  int order() const { return order_; }

  Elem mul(Elem a, Elem b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }

  Elem inv(Elem a) const { return inverses_[a]; }

  // a^k for any integer k (negative exponents go through the inverse).
  Elem power(Elem a, long long k) const;

  // x h x^{-1}; the convention used everywhere in this library.
  Elem conj(Elem x, Elem h) const { return mul(mul(x, h), inv(x)); }

  // a b a^{-1} b^{-1}
  Elem comm(Elem a, Elem b) const {
    return mul(mul(a, b), mul(inv(a), inv(b)));
  }

  int element_order(Elem a) const;

  bool is_abelian() const { return abelian_; }

  // Prime factorization of the group order, primes ascending.
  const std::vector<PrimePower>& prime_factorization() const {
    return primes_;
  }

  std::vector<int> primes() const;

  const std::string& name() const { return name_; }

  // FNV-1a over the (relabelled) table; identifies the concrete table, not
  // the isomorphism class.
  std::uint64_t table_hash() const { return hash_; }

  // Row-major table, n*n entries.
  const std::vector<Elem>& table() const { return table_; }

 private:
  Group() = default;

  int order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverses_;
  std::vector<PrimePower> primes_;
  bool abelian_ = false;
  std::string name_;
  std::uint64_t hash_ = 0;

  friend GroupPtr make_group(std::vector<Elem> flat_table, int n,
                             std::string name, const Budgets& budgets);
};

// Internal funnel used by every construction path: relabels so the identity
// sits at index 0, validates all group axioms, precomputes inverses.
GroupPtr make_group(std::vector<Elem> flat_table, int n, std::string name,
                    const Budgets& budgets);

// A subset of a parent group that forms a subgroup. Elements are kept
// sorted ascending and always include 0.
class Subgroup {
 public:
  // Validates: elements sorted, in range, containing the identity, closed
  // under multiplication. Throws NotASubgroup otherwise.
  Subgroup(GroupPtr parent, std::vector<Elem> elements);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Elem>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  int index() const { return parent_->order() / order(); }

  bool contains(Elem x) const;
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_whole() const {
    return static_cast<int>(elements_.size()) == parent_->order();
  }

  // Same parent object and same element set.
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.get() == b.parent_.get() && a.elements_ == b.elements_;
  }

  // Internal fast path for element sets already known to be subgroups.
  static Subgroup trusted(GroupPtr parent, std::vector<Elem> sorted_elements);

 private:
  struct Trusted {};
  Subgroup(Trusted, GroupPtr parent, std::vector<Elem> elements)
      : parent_(std::move(parent)), elements_(std::move(elements)) {}

  GroupPtr parent_;
  std::vector<Elem> elements_;
};

struct QuotientResult {
  GroupPtr group;
  // projection[x] = image of parent element x; cosets are numbered by their
  // least element, so the kernel is coset 0.
  std::vector<Elem> projection;
};

// A subgroup materialized as a standalone group. to_parent[i] is the parent
// element behind element i; index 0 maps to the identity.
struct SubgroupGroup {
  GroupPtr group;
  std::vector<Elem> to_parent;
};

// --- construction -----------------------------------------------------------

// Build from an explicit square table (entries are element indices). The
// identity may sit anywhere; elements are relabelled to put it at 0 while
// keeping the relative order of the others.
GroupPtr group_from_table(const std::vector<std::vector<int>>& rows,
                          std::string name = "", const Budgets& budgets = {});

// Closure of permutation generators, each given as an image vector on
// {0..d-1}. Element order is canonical: breadth-first from the identity,
// multiplying previously found elements by the generators in input order,
// with each new layer sorted lexicographically by image vector.
GroupPtr group_from_permutations(const std::vector<std::vector<int>>& gens,
                                 std::string name = "",
                                 const Budgets& budgets = {});

GroupPtr cyclic_group(int n, std::string name = "", const Budgets& budgets = {});

// Pairs (a, b) with a from lhs, b from rhs; index = a * |rhs| + b.
GroupPtr direct_product(const GroupPtr& lhs, const GroupPtr& rhs,
                        std::string name = "", const Budgets& budgets = {});

// C_n semidirect C_m where the C_m generator acts on the C_n generator by
// raising to the k-th power. Requires gcd(k, n) = 1 and k^m = 1 mod n.
// Element a^i b^j has index i * m + j.
GroupPtr semidirect_product_cyclic(int n, int m, int k, std::string name = "",
                                   const Budgets& budgets = {});

// --- elementary operations ---------------------------------------------------

Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup whole_subgroup(const GroupPtr& g);

// Smallest subgroup containing the given elements.
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<Elem>& gens);

Subgroup centralizer(const GroupPtr& g, const Subgroup& s);
Subgroup normalizer(const GroupPtr& g, const Subgroup& s);

// x s x^{-1} as a subgroup.
Subgroup conjugate_subgroup(const GroupPtr& g, const Subgroup& s, Elem x);

// Sorted product set {a b : a in lhs, b in rhs}; not necessarily a subgroup.
std::vector<Elem> product_set(const GroupPtr& g, const std::vector<Elem>& lhs,
                              const std::vector<Elem>& rhs);

// Throws NotNormal if n is not normal in g.
QuotientResult quotient(const GroupPtr& g, const Subgroup& n);

// Materialize a subgroup as a group of its own.
SubgroupGroup as_group(const Subgroup& s);

}  // namespace groupcheck
