#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "groupcheck/budgets.hpp"
#include "groupcheck/characteristic.hpp"
#include "groupcheck/group.hpp"
#include "groupcheck/lattice.hpp"
#include "groupcheck/sylow.hpp"

namespace groupcheck {

// A labeled element set attached to a verdict, naming the object that made a
// check pass or fail (a violating subgroup, a vacuous hypothesis, ...).
struct Witness {
  std::string label;
  std::string note;
  std::vector<Elem> elements;
};

// Caches the expensive invariants of one group so that the many claim
// checkers can share lattice, quotient and materialization work.  All
// accessors compute lazily on first use; budget overruns propagate as
// BudgetExceeded from whichever accessor first needs the missing data.
class GroupContext {
 public:
  explicit GroupContext(GroupPtr g, Budgets budgets = {});

  const GroupPtr& group() const { return group_; }
  const Budgets& budgets() const { return budgets_; }

  const SubgroupLattice& lattice();
  const std::vector<Subgroup>& normals();

  const Subgroup& centre_subgroup();
  const Subgroup& hypercentre_subgroup();
  const Subgroup& derived();
  const Subgroup& fitting_subgroup();
  const Subgroup& frattini_subgroup();
  const Subgroup& f0_subgroup();

  bool nilpotent();
  bool soluble();

  const std::vector<Subgroup>& sylows(int p);
  const std::optional<SylowBasis>& basis();

  // Materializes a subgroup as a standalone group (cached by element set).
  const SubgroupGroup& materialized(const Subgroup& s);
  const QuotientResult& quotient_by(const Subgroup& n);

  bool member_nilpotent(const Subgroup& s);
  bool member_normal(const Subgroup& s);
  bool member_subnormal(const Subgroup& s);

  // Members of the lattice that are p-groups for the given prime, in lattice
  // order, excluding the trivial subgroup.
  std::vector<const Subgroup*> primary_members(int p);

 private:
  GroupPtr group_;
  Budgets budgets_;
  std::optional<SubgroupLattice> lattice_;
  std::optional<std::vector<Subgroup>> normals_;
  std::optional<Subgroup> centre_, hypercentre_, derived_, fitting_, frattini_,
      f0_;
  std::optional<bool> nilpotent_, soluble_;
  std::map<int, std::vector<Subgroup>> sylows_;
  std::optional<std::optional<SylowBasis>> basis_;
  std::map<std::vector<Elem>, SubgroupGroup> materialized_;
  std::map<std::vector<Elem>, QuotientResult> quotients_;
  std::map<std::vector<Elem>, bool> member_nilpotent_;
  std::map<std::vector<Elem>, bool> member_subnormal_;
};

// True iff |N_G(P)| / |C_G(P)| is a power of p, where P is a p-group.
// The trivial subgroup passes by convention; a subgroup of mixed order is
// rejected with NotPrimary.
bool frobenius_condition(const GroupPtr& g, const Subgroup& p_subgroup);

// Result of scanning a family of subgroups for a normalizer condition.  When
// `holds` is false, `witness` names the first violator in scan order (primes
// ascending, then subgroups by (order, elements)).
struct ConditionScan {
  bool holds = true;
  std::optional<Witness> witness;
};

// Every non-normal primary subgroup satisfies the normalizer condition.
ConditionScan condition_all_nonnormal(GroupContext& ctx);

// Every non-subnormal primary subgroup satisfies the normalizer condition.
ConditionScan condition_all_nonsubnormal(GroupContext& ctx);

// Every non-subnormal subgroup contained in the focal subgroup of a Sylow
// p-subgroup satisfies the normalizer condition (checked for every Sylow
// p-subgroup).
ConditionScan condition_focal(GroupContext& ctx, int p);

// The normalizer of every non-normal nilpotent subgroup is nilpotent.
ConditionScan is_semi_nilpotent(GroupContext& ctx);

// A group is a Schmidt group when it is not nilpotent but every proper
// subgroup is nilpotent.
bool is_schmidt(GroupContext& ctx);

// All Schmidt members of the subgroup lattice, in lattice order.
std::vector<Subgroup> schmidt_subgroups(GroupContext& ctx);

// All nilpotent self-normalizing members of the lattice, in lattice order.
// For a soluble group these are verified to form exactly one nonempty
// conjugacy class (a classical fact used here as an internal cross-check).
std::vector<Subgroup> carter_subgroups(GroupContext& ctx);

// Nilpotent members not properly contained in any nilpotent member.
std::vector<Subgroup> maximal_nilpotent_subgroups(GroupContext& ctx);

enum class GroupType { TypeA, TypeB, Fails };

// Structure verdict for the normalizer condition on non-subnormal primary
// subgroups.  TypeA: nilpotent.  TypeB: a verified split structure built
// from a Sylow basis reordered so its normal members come first.  Fails:
// some non-subnormal primary subgroup violates the condition (see witness).
struct ClassificationVerdict {
  GroupType kind = GroupType::Fails;
  // TypeB payload.  `r` counts the normal basis members; `e_part` is the
  // product of the non-normal ones; `carter` is its normalizer.
  int r = 0;
  std::optional<SylowBasis> basis;
  std::optional<Subgroup> e_part;
  std::optional<Subgroup> f0_part;
  std::optional<Subgroup> zinf;
  std::optional<Subgroup> carter;
  // Fails payload: the violating subgroup.
  std::optional<Witness> witness;
};

ClassificationVerdict classify_type(GroupContext& ctx);

// Verifies the split structure of a soluble non-nilpotent group: a Sylow
// basis reordered normal-members-first with 1 <= r < t, nilpotent product E
// of the non-normal members, maximal-nilpotent Fitting subgroup equal to the
// product of the normal Sylow part with the hypercentre, Carter normalizer
// N(E), and hypercentre cores for all maximal nilpotent supplements.  Throws
// TheoremViolation when a guaranteed conclusion fails.
ClassificationVerdict verify_split_structure(GroupContext& ctx);

enum class ClaimStatus { Passed, Failed, Skipped };

struct VerdictReport {
  std::string claim_id;
  ClaimStatus status = ClaimStatus::Failed;
  // True when the statement's hypothesis never fired on this group, so the
  // pass carries no evidential weight.
  bool vacuous = false;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
};

struct ClaimInfo {
  std::string id;
  std::string summary;
};

// The fixed catalog of checkable statements, in canonical order.
const std::vector<ClaimInfo>& claim_catalog();

bool is_known_claim(const std::string& claim_id);

// Decides one claim on one group.  Budget overruns yield a Skipped report
// with an explanatory note; a violated guaranteed conclusion yields Failed
// with witnesses.  Deterministic for fixed group, claim and budgets.
VerdictReport check_claim(GroupContext& ctx, const std::string& claim_id);
VerdictReport check_claim(const GroupPtr& g, const std::string& claim_id,
                          const Budgets& budgets = {});

}  // namespace groupcheck
