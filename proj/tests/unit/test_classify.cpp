#include <doctest.h>

#include <algorithm>
#include <vector>

#include "groupcheck/classify.hpp"
#include "groupcheck/errors.hpp"
#include "groupcheck/group.hpp"

using namespace groupcheck;

namespace {

GroupPtr s3() {
  return group_from_permutations({{1, 0, 2}, {1, 2, 0}}, "S3");
}
GroupPtr s4() {
  return group_from_permutations({{1, 0, 2, 3}, {1, 2, 3, 0}}, "S4");
}
GroupPtr a4() {
  return group_from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, "A4");
}
GroupPtr a5() {
  return group_from_permutations({{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}, "A5");
}
GroupPtr q8() {
  return group_from_permutations(
      {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}}, "Q8");
}
GroupPtr sl23() {
  return group_from_permutations(
      {{3, 7, 2, 6, 1, 5, 0, 4}, {5, 2, 0, 6, 3, 1, 7, 4}}, "SL(2,3)");
}
GroupPtr d4() { return semidirect_product_cyclic(4, 2, 3); }
GroupPtr ex330() {
  return direct_product(semidirect_product_cyclic(3, 2, 2),
                        semidirect_product_cyclic(11, 5, 3));
}

std::vector<int> orders_of(const std::vector<Subgroup>& subs) {
  std::vector<int> out;
  for (const auto& s : subs) out.push_back(s.order());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("normalizer condition on single subgroups") {
  auto g = s3();
  CHECK(frobenius_condition(g, Subgroup(g, {0, 1})));
  CHECK(frobenius_condition(g, trivial_subgroup(g)));

  auto g4 = s4();
  GroupContext ctx(g4);
  bool found_sylow3 = false;
  for (const Subgroup* s : ctx.primary_members(3)) {
    if (s->order() == 3) {
      CHECK_FALSE(frobenius_condition(g4, *s));
      found_sylow3 = true;
      break;
    }
  }
  CHECK(found_sylow3);

  auto c12 = cyclic_group(12);
  GroupContext abelian(c12);
  for (int p : {2, 3})
    for (const Subgroup* s : abelian.primary_members(p))
      CHECK(frobenius_condition(c12, *s));
  // Order 6 is not a prime power.
  CHECK_THROWS_AS(frobenius_condition(c12, Subgroup(c12, {0, 2, 4, 6, 8, 10})),
                  NotPrimary);
}

TEST_CASE("condition scans and their witnesses") {
  GroupContext s3ctx(s3());
  CHECK(condition_all_nonnormal(s3ctx).holds);
  CHECK(condition_all_nonsubnormal(s3ctx).holds);

  GroupContext a4ctx(a4());
  CHECK(condition_all_nonnormal(a4ctx).holds);

  GroupContext s4ctx(s4());
  auto s4scan = condition_all_nonnormal(s4ctx);
  REQUIRE_FALSE(s4scan.holds);
  REQUIRE(s4scan.witness.has_value());
  CHECK(s4scan.witness->elements.size() == 3);
  CHECK(s4scan.witness->label == "non_normal_primary");
  auto s4sub = condition_all_nonsubnormal(s4ctx);
  REQUIRE_FALSE(s4sub.holds);
  CHECK(s4sub.witness->elements.size() == 3);

  GroupContext a5ctx(a5());
  auto a5scan = condition_all_nonsubnormal(a5ctx);
  REQUIRE_FALSE(a5scan.holds);
  REQUIRE(a5scan.witness.has_value());
  CHECK(a5scan.witness->elements.size() == 4);

  GroupContext exctx(ex330());
  CHECK(condition_all_nonnormal(exctx).holds);
  CHECK(condition_all_nonsubnormal(exctx).holds);
}

TEST_CASE("non-normal scan failure implies non-subnormal scan failure") {
  for (auto g : {s3(), s4(), a4(), a5(), q8(), sl23(), d4(), cyclic_group(12)}) {
    CAPTURE(g->name());
    GroupContext ctx(g);
    if (condition_all_nonnormal(ctx).holds)
      CHECK(condition_all_nonsubnormal(ctx).holds);
  }
}

TEST_CASE("focal condition") {
  GroupContext c12ctx(cyclic_group(12));
  CHECK(condition_focal(c12ctx, 2).holds);
  CHECK(condition_focal(c12ctx, 3).holds);

  GroupContext s3ctx(s3());
  CHECK(condition_focal(s3ctx, 2).holds);
  CHECK(condition_focal(s3ctx, 3).holds);

  GroupContext s4ctx(s4());
  CHECK(condition_focal(s4ctx, 2).holds);
  auto s4focal3 = condition_focal(s4ctx, 3);
  REQUIRE_FALSE(s4focal3.holds);
  CHECK(s4focal3.witness->elements.size() == 3);

  GroupContext a5ctx(a5());
  auto a5focal = condition_focal(a5ctx, 2);
  REQUIRE_FALSE(a5focal.holds);
  CHECK(a5focal.witness->elements.size() == 4);
}

TEST_CASE("semi-nilpotency") {
  for (auto g : {s3(), a4(), q8(), d4(), cyclic_group(12)}) {
    CAPTURE(g->name());
    GroupContext ctx(g);
    CHECK(is_semi_nilpotent(ctx).holds);
  }
  GroupContext s4ctx(s4());
  auto s4scan = is_semi_nilpotent(s4ctx);
  REQUIRE_FALSE(s4scan.holds);
  CHECK(s4scan.witness->elements.size() == 3);

  GroupContext exctx(ex330());
  auto exscan = is_semi_nilpotent(exctx);
  REQUIRE_FALSE(exscan.holds);
  CHECK(exscan.witness->elements.size() == 2);
}

TEST_CASE("semi-nilpotent groups satisfy the non-normal condition") {
  for (auto g : {s3(), s4(), a4(), a5(), q8(), sl23(), ex330()}) {
    CAPTURE(g->name());
    GroupContext ctx(g);
    if (is_semi_nilpotent(ctx).holds)
      CHECK(condition_all_nonnormal(ctx).holds);
  }
}

TEST_CASE("schmidt groups and schmidt subgroups") {
  GroupContext s3ctx(s3());
  CHECK(is_schmidt(s3ctx));
  CHECK(orders_of(schmidt_subgroups(s3ctx)) == std::vector<int>{6});

  GroupContext a4ctx(a4());
  CHECK(is_schmidt(a4ctx));

  GroupContext sl23ctx(sl23());
  CHECK(is_schmidt(sl23ctx));

  GroupContext s4ctx(s4());
  CHECK_FALSE(is_schmidt(s4ctx));
  CHECK(orders_of(schmidt_subgroups(s4ctx)) ==
        std::vector<int>{6, 6, 6, 6, 12});

  GroupContext q8ctx(q8());
  CHECK_FALSE(is_schmidt(q8ctx));
  CHECK(schmidt_subgroups(q8ctx).empty());

  GroupContext a5ctx(a5());
  auto a5schmidt = orders_of(schmidt_subgroups(a5ctx));
  CHECK(a5schmidt.size() == 21);
  CHECK(std::count(a5schmidt.begin(), a5schmidt.end(), 6) == 10);
  CHECK(std::count(a5schmidt.begin(), a5schmidt.end(), 10) == 6);
  CHECK(std::count(a5schmidt.begin(), a5schmidt.end(), 12) == 5);
}

TEST_CASE("carter subgroups") {
  GroupContext s3ctx(s3());
  CHECK(orders_of(carter_subgroups(s3ctx)) == std::vector<int>{2, 2, 2});

  GroupContext a4ctx(a4());
  CHECK(orders_of(carter_subgroups(a4ctx)) == std::vector<int>{3, 3, 3, 3});

  GroupContext s4ctx(s4());
  CHECK(orders_of(carter_subgroups(s4ctx)) == std::vector<int>{8, 8, 8});

  GroupContext q8ctx(q8());
  CHECK(orders_of(carter_subgroups(q8ctx)) == std::vector<int>{8});

  GroupContext sl23ctx(sl23());
  CHECK(orders_of(carter_subgroups(sl23ctx)) == std::vector<int>{6, 6, 6, 6});

  GroupContext a5ctx(a5());
  CHECK(carter_subgroups(a5ctx).empty());
}

TEST_CASE("maximal nilpotent subgroups") {
  GroupContext s3ctx(s3());
  CHECK(orders_of(maximal_nilpotent_subgroups(s3ctx)) ==
        std::vector<int>{2, 2, 2, 3});

  GroupContext s4ctx(s4());
  CHECK(orders_of(maximal_nilpotent_subgroups(s4ctx)) ==
        std::vector<int>{3, 3, 3, 3, 8, 8, 8});

  GroupContext a5ctx(a5());
  auto a5max = orders_of(maximal_nilpotent_subgroups(a5ctx));
  CHECK(a5max.size() == 21);
  CHECK(std::count(a5max.begin(), a5max.end(), 3) == 10);
  CHECK(std::count(a5max.begin(), a5max.end(), 4) == 5);
  CHECK(std::count(a5max.begin(), a5max.end(), 5) == 6);
}

TEST_CASE("classification verdicts") {
  for (auto g : {q8(), d4(), cyclic_group(12), cyclic_group(1)}) {
    CAPTURE(g->name());
    GroupContext ctx(g);
    CHECK(classify_type(ctx).kind == GroupType::TypeA);
  }

  GroupContext s3ctx(s3());
  auto s3v = classify_type(s3ctx);
  REQUIRE(s3v.kind == GroupType::TypeB);
  CHECK(s3v.r == 1);
  CHECK(s3v.basis->primes == std::vector<int>{3, 2});
  CHECK(s3v.e_part->elements() == std::vector<Elem>{0, 1});
  CHECK(s3v.f0_part->elements() == std::vector<Elem>{0, 2, 4});
  CHECK(s3v.zinf->is_trivial());
  CHECK(s3v.carter->elements() == s3v.e_part->elements());

  GroupContext a4ctx(a4());
  auto a4v = classify_type(a4ctx);
  REQUIRE(a4v.kind == GroupType::TypeB);
  CHECK(a4v.r == 1);
  CHECK(a4v.basis->primes == std::vector<int>{2, 3});
  CHECK(a4v.e_part->order() == 3);
  CHECK(a4v.f0_part->order() == 4);
  CHECK(a4v.zinf->is_trivial());
  CHECK(a4v.carter->order() == 3);

  GroupContext sl23ctx(sl23());
  auto slv = classify_type(sl23ctx);
  REQUIRE(slv.kind == GroupType::TypeB);
  CHECK(slv.r == 1);
  CHECK(slv.e_part->order() == 3);
  CHECK(slv.f0_part->order() == 8);
  CHECK(slv.zinf->order() == 2);
  CHECK(slv.carter->order() == 6);

  GroupContext exctx(ex330());
  auto exv = classify_type(exctx);
  REQUIRE(exv.kind == GroupType::TypeB);
  CHECK(exv.r == 2);
  CHECK(exv.basis->primes == std::vector<int>{3, 11, 2, 5});
  CHECK(exv.e_part->order() == 10);
  CHECK(exv.f0_part->order() == 33);
  CHECK(exv.zinf->is_trivial());
  CHECK(exv.carter->order() == 10);
  CHECK(exv.carter->elements() == exv.e_part->elements());

  GroupContext s4ctx(s4());
  auto s4v = classify_type(s4ctx);
  REQUIRE(s4v.kind == GroupType::Fails);
  REQUIRE(s4v.witness.has_value());
  CHECK(s4v.witness->elements.size() == 3);

  GroupContext a5ctx(a5());
  auto a5v = classify_type(a5ctx);
  REQUIRE(a5v.kind == GroupType::Fails);
  CHECK(a5v.witness->elements.size() == 4);
}

TEST_CASE("classification agrees with the non-subnormal scan") {
  for (auto g : {s3(), s4(), a4(), a5(), q8(), sl23(), d4(), ex330(),
                 cyclic_group(12)}) {
    CAPTURE(g->name());
    GroupContext ctx(g);
    const bool holds = condition_all_nonsubnormal(ctx).holds;
    const auto verdict = classify_type(ctx);
    CHECK((verdict.kind != GroupType::Fails) == holds);
  }
}

TEST_CASE("claim checks on landmark groups") {
  auto vacuous_pass = [](const VerdictReport& r) {
    return r.status == ClaimStatus::Passed && r.vacuous;
  };
  auto real_pass = [](const VerdictReport& r) {
    return r.status == ClaimStatus::Passed && !r.vacuous;
  };

  GroupContext s4ctx(s4());
  auto s4thm13 = check_claim(s4ctx, "THM_1_3");
  CHECK(vacuous_pass(s4thm13));
  REQUIRE_FALSE(s4thm13.witnesses.empty());
  CHECK(s4thm13.witnesses.front().label == "vacuous_hypothesis");
  CHECK(s4thm13.witnesses.front().elements.size() == 3);

  GroupContext a4ctx(a4());
  CHECK(real_pass(check_claim(a4ctx, "THM_1_3")));

  GroupContext a5ctx(a5());
  CHECK(vacuous_pass(check_claim(a5ctx, "PROP_2_5")));
  auto a5fwd = check_claim(a5ctx, "THM_1_4_FORWARD");
  CHECK(vacuous_pass(a5fwd));
  CHECK(a5fwd.witnesses.front().elements.size() == 4);
  CHECK(vacuous_pass(check_claim(a5ctx, "LEM_2_2")));
  CHECK(vacuous_pass(check_claim(a5ctx, "LEM_2_4")));

  GroupContext s3ctx(s3());
  auto s3fwd = check_claim(s3ctx, "THM_1_4_FORWARD");
  CHECK(real_pass(s3fwd));
  bool saw_e = false, saw_carter = false;
  for (const auto& w : s3fwd.witnesses) {
    if (w.label == "e_part") saw_e = true;
    if (w.label == "carter") saw_carter = true;
  }
  CHECK(saw_e);
  CHECK(saw_carter);
  CHECK(real_pass(check_claim(s3ctx, "PROP_2_8_A")));
  CHECK(real_pass(check_claim(s3ctx, "PROP_2_8_B")));
  CHECK(vacuous_pass(check_claim(s4ctx, "PROP_2_8_A")));
  CHECK(vacuous_pass(check_claim(s4ctx, "PROP_2_8_B")));
  CHECK(real_pass(check_claim(s4ctx, "PROP_2_5")));
}

TEST_CASE("all claims pass on a spread of groups") {
  for (auto g : {s3(), s4(), a4(), a5(), q8(), sl23(), d4(), ex330(),
                 cyclic_group(12), cyclic_group(1)}) {
    GroupContext ctx(g);
    for (const auto& info : claim_catalog()) {
      CAPTURE(g->name());
      CAPTURE(info.id);
      auto report = check_claim(ctx, info.id);
      CHECK(report.status == ClaimStatus::Passed);
      CHECK(report.claim_id == info.id);
    }
  }
}

TEST_CASE("claim reports are deterministic") {
  auto g = s4();
  for (const auto& info : claim_catalog()) {
    auto a = check_claim(g, info.id);
    auto b = check_claim(g, info.id);
    CHECK(a.status == b.status);
    CHECK(a.vacuous == b.vacuous);
    CHECK(a.notes == b.notes);
    REQUIRE(a.witnesses.size() == b.witnesses.size());
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
      CHECK(a.witnesses[i].label == b.witnesses[i].label);
      CHECK(a.witnesses[i].note == b.witnesses[i].note);
      CHECK(a.witnesses[i].elements == b.witnesses[i].elements);
    }
  }
}

TEST_CASE("claim machinery rejects unknown ids and respects budgets") {
  CHECK(claim_catalog().size() == 18);
  CHECK(is_known_claim("THM_1_3"));
  CHECK_FALSE(is_known_claim("THM_9_9"));
  CHECK_THROWS_AS(check_claim(s4(), "THM_9_9"), GroupError);

  Budgets tight;
  tight.lattice_subgroup_cap = 2;
  auto report = check_claim(s4(), "THM_1_3", tight);
  CHECK(report.status == ClaimStatus::Skipped);
  REQUIRE_FALSE(report.notes.empty());
  CHECK(report.notes.front().find("budget") != std::string::npos);
}
