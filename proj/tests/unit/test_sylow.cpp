#include <doctest.h>

#include <vector>

#include "groupcheck/group.hpp"
#include "groupcheck/lattice.hpp"
#include "groupcheck/sylow.hpp"

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
GroupPtr c2xs3() { return direct_product(cyclic_group(2), s3()); }

}  // namespace

TEST_CASE("sylow subgroups have the right order and are deterministic") {
  auto g = s4();
  auto p2 = sylow_subgroup(g, 2);
  CHECK(p2.order() == 8);
  CHECK(p2.elements() == sylow_subgroup(g, 2).elements());
  CHECK(sylow_subgroup(g, 3).order() == 3);
  CHECK(sylow_subgroup(g, 5).order() == 1);
  CHECK(sylow_subgroup(a5(), 2).order() == 4);
  CHECK(sylow_subgroup(a5(), 5).order() == 5);
  CHECK_THROWS_AS(sylow_subgroup(g, 6), GroupError);
}

TEST_CASE("sylow conjugate counts") {
  CHECK(all_sylow(s4(), 2).size() == 3);
  CHECK(all_sylow(s4(), 3).size() == 4);
  CHECK(all_sylow(s3(), 2).size() == 3);
  CHECK(all_sylow(s3(), 3).size() == 1);
  CHECK(all_sylow(a5(), 2).size() == 5);
  CHECK(all_sylow(a5(), 3).size() == 10);
  CHECK(all_sylow(a5(), 5).size() == 6);
  CHECK(all_sylow(s4(), 7).size() == 1);
}

TEST_CASE("sylow bases of soluble groups") {
  for (auto g : {s3(), s4(), a4(), c2xs3(), cyclic_group(12)}) {
    CAPTURE(g->name());
    auto basis = sylow_basis(g);
    REQUIRE(basis.has_value());
    CHECK(basis->primes == g->primes());
    int prod = 1;
    for (const auto& m : basis->members) prod *= m.order();
    CHECK(prod == g->order());
  }
}

TEST_CASE("A5 has no sylow basis") {
  CHECK_FALSE(sylow_basis(a5()).has_value());
  Budgets tight;
  tight.sylow_basis_node_cap = 2;
  CHECK_THROWS_AS(sylow_basis(a5(), tight), BudgetExceeded);
}

TEST_CASE("hall subgroups from the basis") {
  CHECK(hall_subgroup(s4(), {2})->order() == 8);
  CHECK(hall_subgroup(s4(), {3})->order() == 3);
  CHECK(hall_subgroup(s4(), {2, 3})->order() == 24);
  CHECK(hall_subgroup(s3(), {3})->elements() == std::vector<Elem>{0, 2, 4});
  CHECK(hall_subgroup(cyclic_group(12), {2})->order() == 4);
  CHECK(hall_subgroup(s4(), {5})->order() == 1);
  // absent whenever no basis exists, even though A5 does contain A4
  CHECK_FALSE(hall_subgroup(a5(), {2, 3}).has_value());
  CHECK_THROWS_AS(hall_subgroup(s4(), {4}), GroupError);
}

TEST_CASE("nilpotency and solubility") {
  CHECK(is_nilpotent(cyclic_group(12)));
  CHECK(is_nilpotent(semidirect_product_cyclic(4, 2, 3)));
  CHECK(is_nilpotent(cyclic_group(1)));
  CHECK_FALSE(is_nilpotent(s3()));
  CHECK_FALSE(is_nilpotent(s4()));
  CHECK_FALSE(is_nilpotent(c2xs3()));

  CHECK(is_soluble(s4()));
  CHECK(is_soluble(cyclic_group(12)));
  CHECK_FALSE(is_soluble(a5()));
}

TEST_CASE("p-solubility") {
  CHECK(is_p_soluble(s4(), 2));
  CHECK(is_p_soluble(s4(), 3));
  CHECK_FALSE(is_p_soluble(a5(), 2));
  CHECK_FALSE(is_p_soluble(a5(), 3));
  CHECK_FALSE(is_p_soluble(a5(), 5));
  CHECK(is_p_soluble(a5(), 7));
}

TEST_CASE("p-nilpotency via normal complements") {
  CHECK(is_p_nilpotent(s3(), 2));
  CHECK_FALSE(is_p_nilpotent(s3(), 3));
  CHECK_FALSE(is_p_nilpotent(s4(), 2));
  CHECK_FALSE(is_p_nilpotent(s4(), 3));
  CHECK(is_p_nilpotent(a4(), 3));
  CHECK_FALSE(is_p_nilpotent(a4(), 2));
  CHECK(is_p_nilpotent(cyclic_group(12), 2));
  CHECK(is_p_nilpotent(cyclic_group(12), 3));
  CHECK(is_p_nilpotent(s4(), 5));
}

TEST_CASE("p-decomposability") {
  CHECK(is_p_decomposable(cyclic_group(12), 2));
  CHECK(is_p_decomposable(cyclic_group(12), 3));
  CHECK(is_p_decomposable(direct_product(cyclic_group(4), s3()), 2) == false);
  CHECK(is_p_decomposable(direct_product(cyclic_group(4), cyclic_group(3)), 2));
  CHECK_FALSE(is_p_decomposable(s3(), 3));
  CHECK_FALSE(is_p_decomposable(c2xs3(), 2));
  CHECK_FALSE(is_p_decomposable(c2xs3(), 3));
}

TEST_CASE("dispersion orderings") {
  auto s3d = dispersion_ordering(s3());
  REQUIRE(s3d.has_value());
  CHECK(s3d->primes == std::vector<int>{3, 2});
  REQUIRE(s3d->tower.size() == 2);
  CHECK(s3d->tower[0].elements() == std::vector<Elem>{0, 2, 4});
  CHECK(s3d->tower[1].is_whole());

  auto c12d = dispersion_ordering(cyclic_group(12));
  REQUIRE(c12d.has_value());
  CHECK(c12d->primes == std::vector<int>{2, 3});
  CHECK(c12d->tower[0].order() == 4);

  auto a4d = dispersion_ordering(a4());
  REQUIRE(a4d.has_value());
  CHECK(a4d->primes == std::vector<int>{2, 3});
  CHECK(a4d->tower[0].order() == 4);

  CHECK_FALSE(dispersion_ordering(s4()).has_value());
  CHECK_FALSE(dispersion_ordering(a5()).has_value());

  Budgets tight;
  tight.dispersion_prime_cap = 1;
  CHECK_THROWS_AS(dispersion_ordering(s3(), tight), TooManyPrimes);
}
