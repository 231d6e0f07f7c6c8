#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "groupcheck/group.hpp"
#include "groupcheck/lattice.hpp"

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

// Independent enumeration used as the oracle: every subgroup is a join of
// cyclic subgroups, so close the cyclic ones under pairwise joins.
std::set<std::vector<Elem>> oracle_subgroups(const GroupPtr& g) {
  std::set<std::vector<Elem>> found;
  found.insert({0});
  for (int x = 1; x < g->order(); ++x) {
    found.insert(generated_subgroup(g, {static_cast<Elem>(x)}).elements());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<Elem>> snapshot(found.begin(), found.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        std::vector<Elem> gens = a;
        gens.insert(gens.end(), b.begin(), b.end());
        auto join = generated_subgroup(g, gens).elements();
        if (found.insert(join).second) changed = true;
      }
    }
  }
  return found;
}

void check_against_oracle(const GroupPtr& g) {
  auto lattice = all_subgroups(g);
  std::set<std::vector<Elem>> got;
  for (const auto& s : lattice.subgroups) got.insert(s.elements());
  CHECK(got.size() == lattice.subgroups.size());
  CHECK(got == oracle_subgroups(g));
}

std::vector<int> orders_of(const std::vector<Subgroup>& subs) {
  std::vector<int> out;
  for (const auto& s : subs) out.push_back(s.order());
  return out;
}

}  // namespace

TEST_CASE("subgroup enumeration matches the join-closure oracle") {
  check_against_oracle(s3());
  check_against_oracle(a4());
  check_against_oracle(s4());
  check_against_oracle(semidirect_product_cyclic(4, 2, 3, "D4"));
  check_against_oracle(direct_product(cyclic_group(2), cyclic_group(3)));
  check_against_oracle(cyclic_group(12));
}

TEST_CASE("subgroup enumeration covers insoluble groups") {
  check_against_oracle(a5());
  auto lattice = all_subgroups(a5());
  CHECK(lattice.subgroups.size() == 59);
  CHECK(lattice.whole().order() == 60);
}

TEST_CASE("known subgroup counts") {
  CHECK(all_subgroups(s3()).subgroups.size() == 6);
  CHECK(all_subgroups(s4()).subgroups.size() == 30);
  CHECK(all_subgroups(a4()).subgroups.size() == 10);
  CHECK(all_subgroups(semidirect_product_cyclic(4, 2, 3)).subgroups.size() ==
        10);
  CHECK(all_subgroups(cyclic_group(6)).subgroups.size() == 4);
}

TEST_CASE("lattice is sorted and indexed") {
  auto lattice = all_subgroups(s4());
  for (std::size_t i = 0; i + 1 < lattice.subgroups.size(); ++i) {
    const auto& a = lattice.subgroups[i];
    const auto& b = lattice.subgroups[i + 1];
    const bool ordered = a.order() < b.order() ||
                         (a.order() == b.order() &&
                          a.elements() < b.elements());
    CHECK(ordered);
  }
  for (std::size_t i = 0; i < lattice.subgroups.size(); ++i) {
    auto idx = lattice.index_of(lattice.subgroups[i].elements());
    REQUIRE(idx.has_value());
    CHECK(*idx == i);
  }
  // {0, 2} is not closed: element 2 is the 4-cycle generator
  CHECK_FALSE(lattice.index_of({0, 2}).has_value());
  CHECK(lattice.trivial().is_trivial());
  CHECK(lattice.whole().is_whole());
}

TEST_CASE("conjugacy classes and normal members of S4") {
  auto lattice = all_subgroups(s4());
  CHECK(lattice.conjugacy_classes.size() == 11);
  std::size_t total = 0;
  for (const auto& cls : lattice.conjugacy_classes) total += cls.size();
  CHECK(total == lattice.subgroups.size());

  std::vector<int> normal_orders;
  for (auto idx : lattice.normal_indices) {
    normal_orders.push_back(lattice.subgroups[idx].order());
  }
  CHECK(normal_orders == std::vector<int>{1, 4, 12, 24});
}

TEST_CASE("normal subgroup enumeration avoids the lattice") {
  CHECK(orders_of(normal_subgroups(s4())) == std::vector<int>{1, 4, 12, 24});
  CHECK(orders_of(normal_subgroups(a4())) == std::vector<int>{1, 4, 12});
  CHECK(orders_of(normal_subgroups(a5())) == std::vector<int>{1, 60});
  CHECK(orders_of(normal_subgroups(cyclic_group(12))) ==
        std::vector<int>{1, 2, 3, 4, 6, 12});

  // agrees with the lattice's normal members
  auto lattice = all_subgroups(s4());
  auto direct = normal_subgroups(s4());
  REQUIRE(direct.size() == lattice.normal_indices.size());
  for (std::size_t k = 0; k < direct.size(); ++k) {
    CHECK(direct[k].elements() ==
          lattice.subgroups[lattice.normal_indices[k]].elements());
  }
}

TEST_CASE("normality, closure, core") {
  auto g = s4();
  auto lattice = all_subgroups(g);
  Subgroup normal_v4 = lattice.trivial();
  for (auto idx : lattice.normal_indices) {
    if (lattice.subgroups[idx].order() == 4) normal_v4 = lattice.subgroups[idx];
  }
  REQUIRE(normal_v4.order() == 4);
  CHECK(is_normal(g, normal_v4));

  auto transposition = generated_subgroup(g, {1});
  REQUIRE(transposition.order() == 2);
  CHECK_FALSE(is_normal(g, transposition));
  CHECK(normal_closure(g, transposition).order() == 24);

  // the normal core of any point stabilizer S3 < S4 is trivial
  for (const auto& s : lattice.subgroups) {
    if (s.order() == 6) CHECK(normal_core(g, s).order() == 1);
    if (s.order() == 8) CHECK(normal_core(g, s).order() == 4);
  }
}

TEST_CASE("subnormality via normal closure descent") {
  auto g = s4();
  auto lattice = all_subgroups(g);
  for (const auto& s : lattice.subgroups) {
    if (s.order() != 2) continue;
    // a C2 is subnormal in S4 exactly when it sits inside the normal V4,
    // i.e. when its normal closure is that V4
    const bool in_v4 = normal_closure(g, s).order() == 4;
    CHECK(is_subnormal(g, s) == in_v4);
  }
  CHECK(is_subnormal(g, whole_subgroup(g)));
  CHECK(is_subnormal(g, trivial_subgroup(g)));

  auto four_cycle = generated_subgroup(g, {2});
  REQUIRE(four_cycle.order() == 4);
  CHECK_FALSE(is_subnormal(g, four_cycle));

  auto h = a5();
  auto a5lat = all_subgroups(h);
  for (const auto& s : a5lat.subgroups) {
    CHECK(is_subnormal(h, s) == (s.is_trivial() || s.is_whole()));
  }
}

TEST_CASE("maximal and minimal normal subgroups") {
  auto lattice = all_subgroups(s4());
  CHECK(orders_of(maximal_subgroups(lattice)) ==
        std::vector<int>{6, 6, 6, 6, 8, 8, 8, 12});
  CHECK(orders_of(minimal_normal_subgroups(s4())) == std::vector<int>{4});
  CHECK(orders_of(minimal_normal_subgroups(a5())) == std::vector<int>{60});
  CHECK(orders_of(minimal_normal_subgroups(cyclic_group(6))) ==
        std::vector<int>{2, 3});
  CHECK(orders_of(maximal_subgroups(s3())) == std::vector<int>{2, 2, 2, 3});
}

TEST_CASE("chief series of S4") {
  auto series = chief_series(s4());
  REQUIRE(series.size() == 3);
  CHECK(series[0].upper.order() == 4);
  CHECK(series[1].upper.order() == 12);
  CHECK(series[2].upper.order() == 24);
  CHECK(series[0].prime == 2);
  CHECK(series[1].prime == 3);
  CHECK(series[2].prime == 2);
  for (const auto& f : series) CHECK(f.elementary_abelian);
  CHECK_FALSE(series[0].central);
  CHECK_FALSE(series[1].central);
  CHECK(series[2].central);
}

TEST_CASE("chief series of A5 is one nonabelian factor") {
  auto series = chief_series(a5());
  REQUIRE(series.size() == 1);
  CHECK(series[0].order == 60);
  CHECK(series[0].prime == 0);
  CHECK_FALSE(series[0].elementary_abelian);
  CHECK_FALSE(series[0].central);
}

TEST_CASE("chief series of an abelian group is central") {
  auto series = chief_series(direct_product(cyclic_group(2), cyclic_group(3)));
  REQUIRE(series.size() == 2);
  CHECK(series[0].order == 2);
  CHECK(series[1].order == 3);
  CHECK(series[0].central);
  CHECK(series[1].central);
}

TEST_CASE("p-subgroup enumeration") {
  auto g = s4();
  auto lattice = all_subgroups(g);
  for (int p : {2, 3}) {
    auto direct = all_p_subgroups(g, p);
    std::vector<std::vector<Elem>> expected;
    for (const auto& s : lattice.subgroups) {
      int o = s.order();
      while (o % p == 0) o /= p;
      if (o == 1) expected.push_back(s.elements());
    }
    REQUIRE(direct.size() == expected.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
      CHECK(direct[i].elements() == expected[i]);
    }
  }
  CHECK(all_p_subgroups(a5(), 2).size() == 21);
  CHECK(all_p_subgroups(g, 5).size() == 1);
  CHECK_THROWS_AS(all_p_subgroups(g, 4), GroupError);
}

TEST_CASE("small generating sets regenerate") {
  for (auto g : {s3(), s4(), a5()}) {
    auto lattice = all_subgroups(g);
    for (const auto& s : lattice.subgroups) {
      auto gens = small_generators(g, s.elements());
      CHECK(generated_subgroup(g, gens).elements() == s.elements());
      CHECK(gens.size() <= 4);
    }
  }
}

TEST_CASE("lattice budgets") {
  Budgets tight;
  tight.lattice_order_cap = 10;
  CHECK_THROWS_AS(all_subgroups(s4(), tight), BudgetExceeded);
  Budgets few;
  few.lattice_subgroup_cap = 5;
  CHECK_THROWS_AS(all_subgroups(s4(), few), BudgetExceeded);
  CHECK_THROWS_AS(normal_subgroups(cyclic_group(12), few), BudgetExceeded);
}

TEST_CASE("lattice build counter moves") {
  auto before = lattice_build_count();
  all_subgroups(s3());
  CHECK(lattice_build_count() == before + 1);
}
