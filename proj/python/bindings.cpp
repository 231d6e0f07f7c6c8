#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "groupcheck/analyze.hpp"
#include "groupcheck/cache.hpp"
#include "groupcheck/catalog.hpp"
#include "groupcheck/classify.hpp"
#include "groupcheck/errors.hpp"
#include "groupcheck/io.hpp"
#include "groupcheck/sweep.hpp"
#include "groupcheck/version.hpp"

namespace py = pybind11;

namespace {

using namespace groupcheck;

// Python-side handle for the shared immutable group.
struct PyGroup {
  GroupPtr g;
};

std::vector<std::vector<int>> table_rows(const GroupPtr& g) {
  const int n = g->order();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    rows[r].reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
      rows[r].push_back(g->mul(static_cast<Elem>(r), static_cast<Elem>(c)));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite group computation engine and claim-checking harness";
  m.attr("__version__") = kToolVersion;

  py::register_exception<GroupError>(m, "GroupError");

  py::class_<PyGroup>(m, "Group")
      .def_property_readonly("name",
                             [](const PyGroup& s) { return s.g->name(); })
      .def_property_readonly("order",
                             [](const PyGroup& s) { return s.g->order(); })
      .def_property_readonly(
          "table_hash", [](const PyGroup& s) { return s.g->table_hash(); })
      .def_property_readonly(
          "abelian", [](const PyGroup& s) { return s.g->is_abelian(); })
      .def("primes", [](const PyGroup& s) { return s.g->primes(); })
      .def("table", [](const PyGroup& s) { return table_rows(s.g); })
      .def("__len__", [](const PyGroup& s) { return s.g->order(); })
      .def("__repr__", [](const PyGroup& s) {
        return "<Group " + s.g->name() + " of order " +
               std::to_string(s.g->order()) + ">";
      });

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& entry : builtin_catalog()) names.push_back(entry.name);
    return names;
  });
  m.def("catalog", [] {
    py::list out;
    for (const auto& entry : builtin_catalog()) {
      py::dict d;
      d["name"] = entry.name;
      d["recipe"] = entry.recipe;
      d["order"] = entry.expected_order;
      out.append(d);
    }
    return out;
  });

  m.def(
      "group",
      [](const std::string& name) { return PyGroup{build_catalog_group(name)}; },
      py::arg("name"), "Construct a catalog group by name.");
  m.def(
      "load", [](const std::string& path) { return PyGroup{load_group(path)}; },
      py::arg("path"), "Load a group from a table or permutation file.");
  m.def(
      "parse", [](const std::string& text) { return PyGroup{parse_group_text(text)}; },
      py::arg("text"), "Parse a group from either text format.");

  m.def("emit_table", [](const PyGroup& s) { return emit_table(s.g); });
  m.def("emit_permutations",
        [](const PyGroup& s) { return emit_permutations(s.g); });

  m.def("claim_ids", [] {
    std::vector<std::string> ids;
    for (const auto& info : claim_catalog()) ids.push_back(info.id);
    return ids;
  });
  m.def("claim_summaries", [] {
    py::dict out;
    for (const auto& info : claim_catalog())
      out[py::str(info.id)] = info.summary;
    return out;
  });

  m.def(
      "analyze_json",
      [](const PyGroup& s) { return analyze(s.g).dump(); }, py::arg("group"),
      "Full structure report as a JSON string.");
  m.def(
      "check_claim_json",
      [](const PyGroup& s, const std::string& claim_id) {
        return verdict_to_json(check_claim(s.g, claim_id)).dump();
      },
      py::arg("group"), py::arg("claim_id"),
      "Verdict for one claim on one group, as a JSON string.");
  m.def(
      "sweep_json",
      [](std::optional<std::vector<std::string>> groups,
         std::optional<std::vector<std::string>> claims, int max_order,
         int jobs, bool use_cache, const std::string& cache_dir,
         bool timing) {
        SweepOptions options;
        options.groups = std::move(groups);
        options.claims = std::move(claims);
        options.max_order = max_order;
        options.jobs = jobs;
        options.use_cache = use_cache;
        options.cache_dir = cache_dir;
        return sweep_to_json(sweep(options), timing).dump();
      },
      py::arg("groups") = py::none(), py::arg("claims") = py::none(),
      py::arg("max_order") = 0, py::arg("jobs") = 1,
      py::arg("use_cache") = true, py::arg("cache_dir") = std::string(),
      py::arg("timing") = false,
      "Claim sweep over catalog groups, as a JSON string.");
}
