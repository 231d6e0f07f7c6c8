#include "groupcheck/classify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "groupcheck/errors.hpp"

namespace groupcheck {

namespace {

bool is_power_of(long long value, int p) {
  if (value <= 0) return false;
  while (value % p == 0) value /= p;
  return value == 1;
}

bool contains_sub(const Subgroup& big, const Subgroup& small) {
  return std::includes(big.elements().begin(), big.elements().end(),
                       small.elements().begin(), small.elements().end());
}

Subgroup product_subgroup(const GroupPtr& g, const Subgroup& a,
                          const Subgroup& b) {
  return Subgroup(g, product_set(g, a.elements(), b.elements()));
}

}  // namespace

GroupContext::GroupContext(GroupPtr g, Budgets budgets)
    : group_(std::move(g)), budgets_(budgets) {
  if (!group_) throw GroupError("null group");
}

const SubgroupLattice& GroupContext::lattice() {
  if (!lattice_) lattice_ = all_subgroups(group_, budgets_);
  return *lattice_;
}

const std::vector<Subgroup>& GroupContext::normals() {
  if (!normals_) normals_ = normal_subgroups(group_, budgets_);
  return *normals_;
}

const Subgroup& GroupContext::centre_subgroup() {
  if (!centre_) centre_ = centre(group_);
  return *centre_;
}

const Subgroup& GroupContext::hypercentre_subgroup() {
  if (!hypercentre_) hypercentre_ = hypercentre(group_);
  return *hypercentre_;
}

const Subgroup& GroupContext::derived() {
  if (!derived_) derived_ = derived_subgroup(group_);
  return *derived_;
}

const Subgroup& GroupContext::fitting_subgroup() {
  if (!fitting_) fitting_ = fitting(group_);
  return *fitting_;
}

const Subgroup& GroupContext::frattini_subgroup() {
  if (!frattini_) frattini_ = frattini(lattice());
  return *frattini_;
}

const Subgroup& GroupContext::f0_subgroup() {
  if (!f0_) f0_ = f0(group_);
  return *f0_;
}

bool GroupContext::nilpotent() {
  if (!nilpotent_) nilpotent_ = is_nilpotent(group_);
  return *nilpotent_;
}

bool GroupContext::soluble() {
  if (!soluble_) soluble_ = is_soluble(group_);
  return *soluble_;
}

const std::vector<Subgroup>& GroupContext::sylows(int p) {
  auto it = sylows_.find(p);
  if (it == sylows_.end()) it = sylows_.emplace(p, all_sylow(group_, p)).first;
  return it->second;
}

const std::optional<SylowBasis>& GroupContext::basis() {
  if (!basis_) basis_ = sylow_basis(group_, budgets_);
  return *basis_;
}

const SubgroupGroup& GroupContext::materialized(const Subgroup& s) {
  auto it = materialized_.find(s.elements());
  if (it == materialized_.end())
    it = materialized_.emplace(s.elements(), as_group(s)).first;
  return it->second;
}

const QuotientResult& GroupContext::quotient_by(const Subgroup& n) {
  auto it = quotients_.find(n.elements());
  if (it == quotients_.end())
    it = quotients_.emplace(n.elements(), quotient(group_, n)).first;
  return it->second;
}

bool GroupContext::member_nilpotent(const Subgroup& s) {
  auto it = member_nilpotent_.find(s.elements());
  if (it == member_nilpotent_.end()) {
    bool value = s.order() == 1 || is_nilpotent(materialized(s).group);
    it = member_nilpotent_.emplace(s.elements(), value).first;
  }
  return it->second;
}

bool GroupContext::member_normal(const Subgroup& s) {
  return is_normal(group_, s);
}

bool GroupContext::member_subnormal(const Subgroup& s) {
  auto it = member_subnormal_.find(s.elements());
  if (it == member_subnormal_.end())
    it = member_subnormal_.emplace(s.elements(), is_subnormal(group_, s)).first;
  return it->second;
}

std::vector<const Subgroup*> GroupContext::primary_members(int p) {
  std::vector<const Subgroup*> out;
  for (const auto& s : lattice().subgroups) {
    if (s.order() == 1) continue;
    if (is_power_of(s.order(), p)) out.push_back(&s);
  }
  return out;
}

bool frobenius_condition(const GroupPtr& g, const Subgroup& p_subgroup) {
  if (p_subgroup.order() == 1) return true;
  int prime = 0;
  long long rest = p_subgroup.order();
  for (const auto& pp : p_subgroup.parent()->prime_factorization()) {
    if (rest % pp.prime == 0) {
      if (prime != 0)
        throw NotPrimary("subgroup order is not a prime power");
      prime = pp.prime;
      while (rest % pp.prime == 0) rest /= pp.prime;
    }
  }
  if (prime == 0 || rest != 1)
    throw NotPrimary("subgroup order is not a prime power");
  const auto n = normalizer(g, p_subgroup);
  const auto c = centralizer(g, p_subgroup);
  if (n.order() % c.order() != 0)
    throw InternalCheckError("centralizer order does not divide normalizer order");
  return is_power_of(n.order() / c.order(), prime);
}

namespace {

// Shared scan over the primary lattice members: primes ascending, subgroups
// in lattice order, restricted by `eligible`, testing the normalizer
// condition and reporting the first violator.
ConditionScan scan_primaries(
    GroupContext& ctx, const std::function<bool(const Subgroup&)>& eligible,
    const std::string& label) {
  ConditionScan result;
  for (const auto& pp : ctx.group()->prime_factorization()) {
    for (const Subgroup* s : ctx.primary_members(pp.prime)) {
      if (!eligible(*s)) continue;
      if (!frobenius_condition(ctx.group(), *s)) {
        const auto n = normalizer(ctx.group(), *s);
        const auto c = centralizer(ctx.group(), *s);
        std::ostringstream note;
        note << "order " << s->order() << " " << pp.prime
             << "-subgroup with |N|/|C| = " << n.order() << "/" << c.order();
        result.holds = false;
        result.witness = Witness{label, note.str(), s->elements()};
        return result;
      }
    }
  }
  return result;
}

}  // namespace

ConditionScan condition_all_nonnormal(GroupContext& ctx) {
  return scan_primaries(
      ctx, [&](const Subgroup& s) { return !ctx.member_normal(s); },
      "non_normal_primary");
}

ConditionScan condition_all_nonsubnormal(GroupContext& ctx) {
  return scan_primaries(
      ctx, [&](const Subgroup& s) { return !ctx.member_subnormal(s); },
      "non_subnormal_primary");
}

ConditionScan condition_focal(GroupContext& ctx, int p) {
  ConditionScan result;
  for (const auto& sylow : ctx.sylows(p)) {
    const auto focal = focal_subgroup(ctx.group(), sylow);
    for (const auto& s : ctx.lattice().subgroups) {
      if (s.order() == 1 || !contains_sub(focal, s)) continue;
      if (ctx.member_subnormal(s)) continue;
      if (!frobenius_condition(ctx.group(), s)) {
        std::ostringstream note;
        note << "order " << s.order()
             << " subgroup inside the focal subgroup of a Sylow " << p
             << "-subgroup";
        result.holds = false;
        result.witness =
            Witness{"non_subnormal_in_focal", note.str(), s.elements()};
        return result;
      }
    }
  }
  return result;
}

ConditionScan is_semi_nilpotent(GroupContext& ctx) {
  ConditionScan result;
  for (const auto& s : ctx.lattice().subgroups) {
    if (s.order() == 1 || s.is_whole()) continue;
    if (ctx.member_normal(s) || !ctx.member_nilpotent(s)) continue;
    const auto n = normalizer(ctx.group(), s);
    if (!ctx.member_nilpotent(n)) {
      std::ostringstream note;
      note << "order " << s.order()
           << " non-normal nilpotent subgroup whose normalizer of order "
           << n.order() << " is not nilpotent";
      result.holds = false;
      result.witness =
          Witness{"nonnilpotent_normalizer", note.str(), s.elements()};
      return result;
    }
  }
  return result;
}

bool is_schmidt(GroupContext& ctx) {
  if (ctx.nilpotent()) return false;
  for (const auto& m : maximal_subgroups(ctx.group(), ctx.budgets()))
    if (!ctx.member_nilpotent(m)) return false;
  return true;
}

std::vector<Subgroup> schmidt_subgroups(GroupContext& ctx) {
  const auto& lat = ctx.lattice();
  std::vector<Subgroup> out;
  for (const auto& s : lat.subgroups) {
    if (ctx.member_nilpotent(s)) continue;
    bool all_proper_nilpotent = true;
    for (const auto& t : lat.subgroups) {
      if (t.order() >= s.order()) break;
      if (!contains_sub(s, t)) continue;
      if (!ctx.member_nilpotent(t)) {
        all_proper_nilpotent = false;
        break;
      }
    }
    if (all_proper_nilpotent) out.push_back(s);
  }
  return out;
}

std::vector<Subgroup> carter_subgroups(GroupContext& ctx) {
  const auto& lat = ctx.lattice();
  std::vector<Subgroup> out;
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    const auto& s = lat.subgroups[i];
    if (!ctx.member_nilpotent(s)) continue;
    if (normalizer(ctx.group(), s).order() != s.order()) continue;
    out.push_back(s);
    indices.push_back(i);
  }
  if (ctx.soluble()) {
    // Classical fact used as an internal cross-check: the Carter subgroups
    // of a soluble group form a single nonempty conjugacy class.
    if (out.empty())
      throw InternalCheckError("soluble group without a Carter subgroup");
    for (const auto& cls : lat.conjugacy_classes) {
      if (std::find(cls.begin(), cls.end(), indices.front()) == cls.end())
        continue;
      std::vector<std::size_t> sorted_class(cls.begin(), cls.end());
      std::sort(sorted_class.begin(), sorted_class.end());
      if (sorted_class != indices)
        throw InternalCheckError(
            "Carter subgroups of a soluble group do not form one conjugacy class");
      break;
    }
  }
  return out;
}

std::vector<Subgroup> maximal_nilpotent_subgroups(GroupContext& ctx) {
  const auto& lat = ctx.lattice();
  std::vector<const Subgroup*> nilpotent_members;
  for (const auto& s : lat.subgroups)
    if (ctx.member_nilpotent(s)) nilpotent_members.push_back(&s);
  std::vector<Subgroup> out;
  for (const Subgroup* s : nilpotent_members) {
    bool maximal = true;
    for (const Subgroup* t : nilpotent_members) {
      if (t->order() <= s->order()) continue;
      if (contains_sub(*t, *s)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(*s);
  }
  return out;
}

namespace {

std::string violation_text(const GroupPtr& g, const std::string& what) {
  std::ostringstream out;
  out << g->name() << ": " << what;
  return out.str();
}

}  // namespace

ClassificationVerdict classify_type(GroupContext& ctx) {
  ClassificationVerdict verdict;
  auto scan = condition_all_nonsubnormal(ctx);
  if (!scan.holds) {
    verdict.kind = GroupType::Fails;
    verdict.witness = std::move(scan.witness);
    return verdict;
  }
  if (ctx.nilpotent()) {
    verdict.kind = GroupType::TypeA;
    return verdict;
  }
  if (!ctx.soluble())
    throw TheoremViolation(violation_text(
        ctx.group(),
        "normalizer condition holds on non-subnormal primary subgroups but the group is insoluble"));
  return verify_split_structure(ctx);
}

ClassificationVerdict verify_split_structure(GroupContext& ctx) {
  ClassificationVerdict verdict;
  const auto& g = ctx.group();
  const auto& basis_opt = ctx.basis();
  if (!basis_opt)
    throw BudgetExceeded("sylow basis search",
                         ctx.budgets().sylow_basis_node_cap,
                         ctx.budgets().sylow_basis_node_cap + 1);

  // Reorder the basis so its normal members come first, keeping primes
  // ascending inside each block, and split off E as the product of the
  // non-normal members.
  SylowBasis ordered;
  std::vector<std::size_t> normal_at, nonnormal_at;
  for (std::size_t i = 0; i < basis_opt->members.size(); ++i) {
    if (ctx.member_normal(basis_opt->members[i]))
      normal_at.push_back(i);
    else
      nonnormal_at.push_back(i);
  }
  for (std::size_t i : normal_at) {
    ordered.primes.push_back(basis_opt->primes[i]);
    ordered.members.push_back(basis_opt->members[i]);
  }
  for (std::size_t i : nonnormal_at) {
    ordered.primes.push_back(basis_opt->primes[i]);
    ordered.members.push_back(basis_opt->members[i]);
  }
  const int r = static_cast<int>(normal_at.size());
  const int t = static_cast<int>(ordered.members.size());
  if (r < 1)
    throw TheoremViolation(
        violation_text(g, "no normal Sylow subgroup in a split-type group"));
  if (r >= t)
    throw TheoremViolation(violation_text(
        g, "all Sylow subgroups normal in a non-nilpotent group"));

  Subgroup e_part = trivial_subgroup(g);
  for (std::size_t i : nonnormal_at)
    e_part = product_subgroup(g, e_part, basis_opt->members[i]);
  if (!ctx.member_nilpotent(e_part))
    throw TheoremViolation(violation_text(
        g, "product of the non-normal Sylow basis members is not nilpotent"));

  const auto& fit = ctx.fitting_subgroup();
  for (const auto& s : ctx.lattice().subgroups)
    if (s.order() > fit.order() && ctx.member_nilpotent(s) &&
        contains_sub(s, fit))
      throw TheoremViolation(violation_text(
          g, "Fitting subgroup is not a maximal nilpotent subgroup"));
  const auto& zinf = ctx.hypercentre_subgroup();
  if (!(product_subgroup(g, ctx.f0_subgroup(), zinf) == fit))
    throw TheoremViolation(violation_text(
        g,
        "Fitting subgroup differs from the product of the normal Sylow part and the hypercentre"));

  const auto carter = normalizer(g, e_part);
  if (!ctx.member_nilpotent(carter) ||
      normalizer(g, carter).order() != carter.order())
    throw TheoremViolation(violation_text(
        g, "normalizer of the non-normal part is not a Carter subgroup"));

  for (const auto& v : maximal_nilpotent_subgroups(ctx)) {
    if (static_cast<long long>(
            product_set(g, fit.elements(), v.elements()).size()) !=
        g->order())
      continue;
    if (!(normal_core(g, v) == zinf))
      throw TheoremViolation(violation_text(
          g,
          "normal core of a maximal nilpotent supplement differs from the hypercentre"));
  }

  verdict.kind = GroupType::TypeB;
  verdict.r = r;
  verdict.basis = std::move(ordered);
  verdict.e_part = std::move(e_part);
  verdict.f0_part = ctx.f0_subgroup();
  verdict.zinf = zinf;
  verdict.carter = carter;
  return verdict;
}

}  // namespace groupcheck
