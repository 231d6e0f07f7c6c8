#include "groupcheck/catalog.hpp"

#include <functional>
#include <map>

#include "groupcheck/errors.hpp"

namespace groupcheck {

namespace {

using Builder = std::function<GroupPtr(const std::string&, const Budgets&)>;

struct Recipe {
  CatalogEntry entry;
  Builder build;
};

GroupPtr make_s3(const std::string& name, const Budgets& b) {
  return group_from_permutations({{1, 0, 2}, {1, 2, 0}}, name, b);
}

GroupPtr make_s4(const std::string& name, const Budgets& b) {
  return group_from_permutations({{1, 0, 2, 3}, {1, 2, 3, 0}}, name, b);
}

GroupPtr make_a4(const std::string& name, const Budgets& b) {
  return group_from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, name, b);
}

GroupPtr make_a5(const std::string& name, const Budgets& b) {
  return group_from_permutations({{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}, name, b);
}

// Unit quaternions acting on themselves by left translation.
GroupPtr make_q8(const std::string& name, const Budgets& b) {
  return group_from_permutations(
      {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}}, name, b);
}

// Determinant-one 2x2 matrices over the field with three elements, acting on
// the eight nonzero vectors.
GroupPtr make_sl23(const std::string& name, const Budgets& b) {
  return group_from_permutations(
      {{3, 7, 2, 6, 1, 5, 0, 4}, {5, 2, 0, 6, 3, 1, 7, 4}}, name, b);
}

std::vector<Recipe> build_recipes() {
  std::vector<Recipe> recipes;
  auto add = [&recipes](std::string name, std::string recipe, int order,
                        Builder build) {
    recipes.push_back(
        {CatalogEntry{std::move(name), std::move(recipe), order},
         std::move(build)});
  };

  for (int n = 1; n <= 64; ++n) {
    add("C" + std::to_string(n), "cyclic of order " + std::to_string(n), n,
        [n](const std::string& name, const Budgets& b) {
          return cyclic_group(n, name, b);
        });
  }
  add("C2xC2", "direct product C2 x C2", 4,
      [](const std::string& name, const Budgets& b) {
        return direct_product(cyclic_group(2, "", b), cyclic_group(2, "", b),
                              name, b);
      });
  add("Q8", "quaternion group of order 8", 8, make_q8);
  for (int n = 2; n <= 12; ++n) {
    add("D" + std::to_string(2 * n),
        "dihedral of order " + std::to_string(2 * n), 2 * n,
        [n](const std::string& name, const Budgets& b) {
          return semidirect_product_cyclic(n, 2, n - 1, name, b);
        });
  }
  add("S3", "symmetric group on 3 points", 6, make_s3);
  add("S4", "symmetric group on 4 points", 24, make_s4);
  add("A4", "alternating group on 4 points", 12, make_a4);
  add("A5", "alternating group on 5 points", 60, make_a5);
  add("SL(2,3)", "special linear group of degree 2 over GF(3)", 24, make_sl23);

  struct Frobenius {
    int p, q, k;
  };
  // k has multiplicative order q modulo p.
  const Frobenius frob[] = {{3, 2, 2}, {5, 2, 4}, {7, 3, 2}, {11, 5, 3},
                            {13, 3, 3}};
  for (const auto& f : frob) {
    add("C" + std::to_string(f.p) + ":C" + std::to_string(f.q),
        "nonabelian split extension of C" + std::to_string(f.p) + " by C" +
            std::to_string(f.q),
        f.p * f.q, [f](const std::string& name, const Budgets& b) {
          return semidirect_product_cyclic(f.p, f.q, f.k, name, b);
        });
  }

  add("ex12_330", "direct product (C3:C2) x (C11:C5)", 330,
      [](const std::string& name, const Budgets& b) {
        return direct_product(semidirect_product_cyclic(3, 2, 2, "C3:C2", b),
                              semidirect_product_cyclic(11, 5, 3, "C11:C5", b),
                              name, b);
      });
  add("C2xS3", "direct product C2 x S3", 12,
      [](const std::string& name, const Budgets& b) {
        return direct_product(cyclic_group(2, "", b), make_s3("S3", b), name,
                              b);
      });
  add("C3xS3", "direct product C3 x S3", 18,
      [](const std::string& name, const Budgets& b) {
        return direct_product(cyclic_group(3, "", b), make_s3("S3", b), name,
                              b);
      });
  add("C2xA4", "direct product C2 x A4", 24,
      [](const std::string& name, const Budgets& b) {
        return direct_product(cyclic_group(2, "", b), make_a4("A4", b), name,
                              b);
      });
  return recipes;
}

const std::vector<Recipe>& recipes() {
  static const std::vector<Recipe> r = build_recipes();
  return r;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& r : recipes()) out.push_back(r.entry);
    return out;
  }();
  return entries;
}

bool catalog_has(const std::string& name) {
  for (const auto& r : recipes())
    if (r.entry.name == name) return true;
  return false;
}

GroupPtr build_catalog_group(const std::string& name, const Budgets& budgets) {
  for (const auto& r : recipes()) {
    if (r.entry.name != name) continue;
    auto g = r.build(name, budgets);
    if (g->order() != r.entry.expected_order)
      throw InternalCheckError("catalog entry order mismatch for " + name);
    return g;
  }
  throw GroupError("unknown catalog group: " + name);
}

}  // namespace groupcheck
