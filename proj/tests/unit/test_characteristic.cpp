#include <doctest.h>

#include <vector>

#include "groupcheck/characteristic.hpp"
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
GroupPtr d4() { return semidirect_product_cyclic(4, 2, 3, "D4"); }
GroupPtr c2xs3() { return direct_product(cyclic_group(2), s3()); }

}  // namespace

TEST_CASE("centres") {
  CHECK(centre(s3()).order() == 1);
  CHECK(centre(s4()).order() == 1);
  CHECK(centre(d4()).elements() == std::vector<Elem>{0, 4});
  CHECK(centre(cyclic_group(12)).is_whole());
  CHECK(centre(c2xs3()).elements() == std::vector<Elem>{0, 6});
}

TEST_CASE("upper central series") {
  auto series = upper_central_series(d4());
  REQUIRE(series.terms.size() == 3);
  CHECK(series.terms[0].order() == 1);
  CHECK(series.terms[1].order() == 2);
  CHECK(series.terms[2].order() == 8);
  CHECK(hypercentre(d4()).is_whole());

  CHECK(hypercentre(s3()).order() == 1);
  CHECK(hypercentre(s4()).order() == 1);
  CHECK(hypercentre(a4()).order() == 1);
  CHECK(hypercentre(c2xs3()).order() == 2);
  CHECK(hypercentre(cyclic_group(12)).is_whole());
}

TEST_CASE("hypercentre agrees with its chief chain characterization") {
  for (auto g : {s3(), s4(), a4(), a5(), d4(), c2xs3(),
                 cyclic_group(12), cyclic_group(1)}) {
    CAPTURE(g->name());
    CHECK(hypercentre(g).elements() == hypercentre_by_chief(g).elements());
  }
}

TEST_CASE("derived subgroups and series") {
  CHECK(derived_subgroup(s3()).elements() == std::vector<Elem>{0, 2, 4});
  CHECK(derived_subgroup(s4()).order() == 12);
  CHECK(derived_subgroup(a4()).order() == 4);
  CHECK(derived_subgroup(a5()).is_whole());
  CHECK(derived_subgroup(d4()).elements() == std::vector<Elem>{0, 4});
  CHECK(derived_subgroup(cyclic_group(12)).order() == 1);

  auto series = derived_series(s4());
  std::vector<int> orders;
  for (const auto& t : series) orders.push_back(t.order());
  CHECK(orders == std::vector<int>{24, 12, 4, 1});
  CHECK(derived_series(a5()).size() == 1);
}

TEST_CASE("p-cores and pi-cores") {
  CHECK(p_core(s4(), 2).order() == 4);
  CHECK(p_core(s4(), 3).order() == 1);
  CHECK(p_core(s3(), 3).elements() == std::vector<Elem>{0, 2, 4});
  CHECK(p_core(s3(), 2).order() == 1);
  CHECK(p_core(a4(), 2).order() == 4);
  CHECK(p_core(a5(), 2).order() == 1);
  CHECK(p_core(s4(), 5).order() == 1);

  for (auto g : {s3(), s4(), a4(), c2xs3()}) {
    for (int p : {2, 3}) {
      CAPTURE(g->name());
      CAPTURE(p);
      CHECK(pi_core(g, {p}).elements() == p_core(g, p).elements());
    }
  }
  CHECK(pi_core(s4(), {2, 3}).is_whole());
  CHECK(pi_core(c2xs3(), {2, 3}).is_whole());
  CHECK(pi_core(a5(), {2, 3}).order() == 1);
}

TEST_CASE("fitting subgroup") {
  CHECK(fitting(s4()).order() == 4);
  CHECK(fitting(s3()).order() == 3);
  CHECK(fitting(a5()).order() == 1);
  CHECK(fitting(c2xs3()).order() == 6);
  CHECK(fitting(cyclic_group(12)).is_whole());
}

TEST_CASE("frattini subgroup") {
  CHECK(frattini(s4()).order() == 1);
  CHECK(frattini(d4()).elements() == std::vector<Elem>{0, 4});
  CHECK(frattini(cyclic_group(12)).order() == 2);
  CHECK(frattini(cyclic_group(1)).order() == 1);
  CHECK(frattini(a5()).order() == 1);
}

TEST_CASE("product of normal Sylow subgroups") {
  CHECK(f0(s4()).order() == 1);
  CHECK(f0(s3()).order() == 3);
  CHECK(f0(a4()).order() == 4);
  CHECK(f0(c2xs3()).order() == 3);
  CHECK(f0(cyclic_group(12)).is_whole());
  CHECK(f0(a5()).order() == 1);
}

TEST_CASE("focal subgroups equal derived intersect Sylow") {
  for (auto g : {s3(), s4(), a4(), a5(), d4(), c2xs3()}) {
    auto der = derived_subgroup(g);
    for (int p : g->primes()) {
      CAPTURE(g->name());
      CAPTURE(p);
      auto sylow = sylow_subgroup(g, p);
      auto focal = focal_subgroup(g, sylow);
      std::vector<Elem> expected;
      for (Elem e : sylow.elements()) {
        if (der.contains(e)) expected.push_back(e);
      }
      CHECK(focal.elements() == expected);
    }
  }
  auto g4 = s4();
  CHECK(focal_subgroup(g4, sylow_subgroup(g4, 2)).order() == 4);
  auto g3 = s3();
  CHECK(focal_subgroup(g3, sylow_subgroup(g3, 2)).order() == 1);
}

TEST_CASE("focal subgroup rejects non-Sylow input") {
  auto g = s4();
  auto v4 = p_core(g, 2);
  REQUIRE(v4.order() == 4);
  CHECK_THROWS_AS(focal_subgroup(g, v4), NotSylow);
  for (const auto& s : all_subgroups(g).subgroups) {
    if (s.order() == 6) {
      CHECK_THROWS_AS(focal_subgroup(g, s), NotSylow);
      break;
    }
  }
  // trivial subgroup is the Sylow p-subgroup for p outside the spectrum
  CHECK(focal_subgroup(g, trivial_subgroup(g)).order() == 1);
}
