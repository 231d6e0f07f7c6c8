#include <doctest.h>

#include <vector>

#include "groupcheck/group.hpp"

using namespace groupcheck;

namespace {

// S3 as the closure of (0 1) and (0 1 2). The canonical element order for
// this generator list is frozen here and relied on across the test suite:
//   0 = id, 1 = (0 1), 2 = (0 1 2), 3 = (1 2), 4 = (0 2 1), 5 = (0 2)
GroupPtr s3() {
  return group_from_permutations({{1, 0, 2}, {1, 2, 0}}, "S3");
}

}  // namespace

TEST_CASE("permutation closure fixes a canonical element order") {
  auto g = s3();
  REQUIRE(g->order() == 6);

  std::vector<int> orders;
  for (Elem x = 0; x < 6; ++x) orders.push_back(g->element_order(x));
  CHECK(orders == std::vector<int>{1, 2, 3, 2, 3, 2});

  // (0 1)(0 1 2) = (1 2) and (0 1 2)(0 1) = (0 2)
  CHECK(g->mul(1, 2) == 3);
  CHECK(g->mul(2, 1) == 5);
  CHECK(g->mul(2, 2) == 4);
  CHECK(g->inv(2) == 4);
  CHECK(g->power(2, -1) == 4);
  CHECK_FALSE(g->is_abelian());
  CHECK(g->primes() == std::vector<int>{2, 3});
}

TEST_CASE("generated subgroups of S3") {
  auto g = s3();
  auto a3 = generated_subgroup(g, {2});
  CHECK(a3.elements() == std::vector<Elem>{0, 2, 4});
  auto flip = generated_subgroup(g, {1});
  CHECK(flip.elements() == std::vector<Elem>{0, 1});
  CHECK(generated_subgroup(g, {}).elements() == std::vector<Elem>{0});
  CHECK(generated_subgroup(g, {1, 2}).order() == 6);
}

TEST_CASE("conjugation and centralizers in S3") {
  auto g = s3();
  auto flip = generated_subgroup(g, {1});
  auto conj = conjugate_subgroup(g, flip, 2);
  CHECK(conj.elements() == std::vector<Elem>{0, 3});

  auto a3 = generated_subgroup(g, {2});
  CHECK(centralizer(g, a3).elements() == a3.elements());
  CHECK(centralizer(g, whole_subgroup(g)).elements() == std::vector<Elem>{0});
  CHECK(normalizer(g, flip).elements() == flip.elements());
  CHECK(normalizer(g, a3).order() == 6);
}

TEST_CASE("quotient by the alternating subgroup is the sign map") {
  auto g = s3();
  auto a3 = generated_subgroup(g, {2});
  auto q = quotient(g, a3);
  REQUIRE(q.group->order() == 2);
  CHECK(q.projection == std::vector<Elem>{0, 1, 0, 1, 0, 1});

  auto flip = generated_subgroup(g, {1});
  CHECK_THROWS_AS(quotient(g, flip), NotNormal);
}

TEST_CASE("product sets need not be subgroups") {
  auto g = s3();
  auto flip = generated_subgroup(g, {1});
  auto other = generated_subgroup(g, {3});
  auto prod = product_set(g, flip.elements(), other.elements());
  CHECK(prod == std::vector<Elem>{0, 1, 2, 3});
}

TEST_CASE("subgroup constructor validates") {
  auto g = s3();
  CHECK_THROWS_AS(Subgroup(g, {0, 2}), NotASubgroup);
  CHECK_THROWS_AS(Subgroup(g, {1}), NotASubgroup);
  CHECK_THROWS_AS(Subgroup(g, {0, 9}), NotASubgroup);
  CHECK_THROWS_AS(Subgroup(g, {}), NotASubgroup);
  CHECK(Subgroup(g, {4, 2, 0}).elements() == std::vector<Elem>{0, 2, 4});
}

TEST_CASE("table construction relabels the identity to index 0") {
  // C3 written with the identity at index 2.
  auto g = group_from_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  REQUIRE(g->order() == 3);
  CHECK(g->table() == cyclic_group(3)->table());
}

TEST_CASE("table construction rejects non-groups") {
  CHECK_THROWS_AS(group_from_table({{0, 1}, {1, 1}}), NotAGroup);
  CHECK_THROWS_AS(group_from_table({{0, 1}, {1}}), BadShape);
  CHECK_THROWS_AS(group_from_table({{0, 1}, {1, 7}}), BadShape);
  CHECK_THROWS_AS(group_from_table({}), BadShape);

  // A loop of order 5: has identity, Latin rows and columns, two-sided
  // inverses, but (1*1)*2 != 1*(1*2).
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(group_from_table(loop), NotAGroup);
}

TEST_CASE("permutation input validation") {
  CHECK_THROWS_AS(group_from_permutations({{0, 0, 1}}), NotAPermutation);
  CHECK_THROWS_AS(group_from_permutations({{1, 0}, {0, 1, 2}}),
                  NotAPermutation);
  CHECK(group_from_permutations({})->order() == 1);
}

TEST_CASE("direct products") {
  auto g = direct_product(cyclic_group(2), cyclic_group(3));
  REQUIRE(g->order() == 6);
  CHECK(g->is_abelian());
  CHECK(g->element_order(4) == 6);
  CHECK(g->name() == "C2xC3");
}

TEST_CASE("cyclic semidirect products") {
  auto g = semidirect_product_cyclic(3, 2, 2, "S3v2");
  REQUIRE(g->order() == 6);
  CHECK_FALSE(g->is_abelian());
  // b a b^{-1} = a^2 with a at index 2, b at index 1, a^2 at index 4.
  CHECK(g->conj(1, 2) == 4);

  CHECK_THROWS_AS(semidirect_product_cyclic(5, 2, 2), BadAction);
  CHECK_THROWS_AS(semidirect_product_cyclic(9, 3, 3), BadAction);
}

TEST_CASE("construction budgets") {
  CHECK_THROWS_AS(cyclic_group(513), BudgetExceeded);
  Budgets tight;
  tight.construction_order_cap = 3;
  CHECK_THROWS_AS(group_from_permutations({{1, 2, 3, 0}}, "", tight),
                  BudgetExceeded);
  CHECK_THROWS_AS(direct_product(cyclic_group(2), cyclic_group(3), "", tight),
                  BudgetExceeded);
}

TEST_CASE("materializing a subgroup keeps element mapping") {
  auto g = s3();
  auto a3 = generated_subgroup(g, {2});
  auto m = as_group(a3);
  REQUIRE(m.group->order() == 3);
  CHECK(m.to_parent == std::vector<Elem>{0, 2, 4});
  CHECK(m.group->table() == cyclic_group(3)->table());
}

TEST_CASE("table hash identifies the concrete table") {
  CHECK(cyclic_group(6)->table_hash() == cyclic_group(6)->table_hash());
  CHECK(cyclic_group(6)->table_hash() != cyclic_group(7)->table_hash());
  // isomorphic but differently presented groups hash differently
  CHECK(s3()->table_hash() != semidirect_product_cyclic(3, 2, 2)->table_hash());
}
