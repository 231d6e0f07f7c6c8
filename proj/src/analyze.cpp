#include "groupcheck/analyze.hpp"

#include <cstdio>
#include <sstream>

#include "groupcheck/classify.hpp"
#include "groupcheck/errors.hpp"
#include "groupcheck/sylow.hpp"
#include "groupcheck/version.hpp"

namespace groupcheck {

namespace {

using nlohmann::ordered_json;

std::string hex64(std::uint64_t value) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "0x%016llx",
                static_cast<unsigned long long>(value));
  return buf;
}

// Runs one report field, turning a budget overrun into a skip marker instead
// of abandoning the whole report.
template <typename F>
ordered_json guarded(F&& field) {
  try {
    return field();
  } catch (const BudgetExceeded& e) {
    return ordered_json{{"skipped", e.what()}};
  }
}

ordered_json subgroup_json(const Subgroup& s) {
  return ordered_json{{"order", s.order()}, {"elements", s.elements()}};
}

ordered_json witness_json(const Witness& w) {
  return ordered_json{
      {"label", w.label}, {"note", w.note}, {"elements", w.elements}};
}

ordered_json scan_json(const ConditionScan& scan) {
  ordered_json out{{"holds", scan.holds}};
  if (scan.witness) out["witness"] = witness_json(*scan.witness);
  return out;
}

ordered_json basis_json(const SylowBasis& basis) {
  ordered_json members = ordered_json::array();
  for (std::size_t i = 0; i < basis.members.size(); ++i) {
    ordered_json m = subgroup_json(basis.members[i]);
    m["prime"] = basis.primes[i];
    members.push_back(std::move(m));
  }
  return ordered_json{{"primes", basis.primes}, {"members", members}};
}

ordered_json classification_json(const ClassificationVerdict& verdict) {
  ordered_json out;
  switch (verdict.kind) {
    case GroupType::TypeA:
      out["kind"] = "TypeA";
      break;
    case GroupType::TypeB:
      out["kind"] = "TypeB";
      out["r"] = verdict.r;
      out["basis"] = basis_json(*verdict.basis);
      out["e_part"] = subgroup_json(*verdict.e_part);
      out["f0_part"] = subgroup_json(*verdict.f0_part);
      out["hypercentre"] = subgroup_json(*verdict.zinf);
      out["carter"] = subgroup_json(*verdict.carter);
      break;
    case GroupType::Fails:
      out["kind"] = "Fails";
      out["witness"] = witness_json(*verdict.witness);
      break;
  }
  return out;
}

bool is_cyclic(const GroupPtr& g) {
  for (int x = 0; x < g->order(); ++x)
    if (g->element_order(static_cast<Elem>(x)) == g->order()) return true;
  return false;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string join_ints(const ordered_json& array) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : array) {
    if (!first) out << ' ';
    out << v.get<long long>();
    first = false;
  }
  return out.str();
}

bool skipped(const ordered_json& j) {
  return j.is_object() && j.contains("skipped");
}

std::string set_text(const ordered_json& j) {
  if (skipped(j)) return "skipped (" + j["skipped"].get<std::string>() + ")";
  return "order " + std::to_string(j["order"].get<long long>()) + "  {" +
         join_ints(j["elements"]) + "}";
}

std::string witness_text(const ordered_json& w) {
  std::string out = w["label"].get<std::string>() + " {" +
                    join_ints(w["elements"]) + "}";
  const auto note = w["note"].get<std::string>();
  if (!note.empty()) out += "  (" + note + ")";
  return out;
}

std::string scan_text(const ordered_json& j) {
  if (skipped(j)) return "skipped (" + j["skipped"].get<std::string>() + ")";
  std::string out = j["holds"].get<bool>() ? "holds" : "fails";
  if (j.contains("witness")) out += "  witness " + witness_text(j["witness"]);
  return out;
}

}  // namespace

ordered_json analyze(const GroupPtr& g, const Budgets& budgets) {
  GroupContext ctx(g, budgets);

  ordered_json report;
  report["schema_version"] = kReportSchemaVersion;
  report["tool"] = ordered_json{{"name", kToolName}, {"version", kToolVersion}};
  report["group"] = ordered_json{{"name", g->name()},
                                 {"order", g->order()},
                                 {"table_hash", hex64(g->table_hash())},
                                 {"primes", g->primes()}};
  report["flags"] =
      guarded([&] {
        return ordered_json{{"abelian", g->is_abelian()},
                            {"nilpotent", ctx.nilpotent()},
                            {"soluble", ctx.soluble()}};
      });

  ordered_json subgroups;
  subgroups["centre"] = guarded([&] { return subgroup_json(ctx.centre_subgroup()); });
  subgroups["derived"] = guarded([&] { return subgroup_json(ctx.derived()); });
  subgroups["frattini"] =
      guarded([&] { return subgroup_json(ctx.frattini_subgroup()); });
  subgroups["hypercentre"] =
      guarded([&] { return subgroup_json(ctx.hypercentre_subgroup()); });
  subgroups["f0"] = guarded([&] { return subgroup_json(ctx.f0_subgroup()); });
  subgroups["fitting"] =
      guarded([&] { return subgroup_json(ctx.fitting_subgroup()); });
  report["subgroups"] = std::move(subgroups);

  report["sylow_basis"] = guarded([&]() -> ordered_json {
    const auto& basis = ctx.basis();
    if (!basis) return nullptr;
    return basis_json(*basis);
  });
  report["dispersion"] = guarded([&]() -> ordered_json {
    const auto ordering = dispersion_ordering(g, budgets);
    if (!ordering) return nullptr;
    return ordered_json{{"primes", ordering->primes}};
  });
  report["carter"] = guarded([&]() -> ordered_json {
    const auto carters = carter_subgroups(ctx);
    ordered_json out{{"class_size", carters.size()}};
    if (carters.empty())
      out["order"] = nullptr;
    else
      out["order"] = carters.front().order();
    return out;
  });
  report["schmidt_count"] =
      guarded([&]() -> ordered_json { return schmidt_subgroups(ctx).size(); });

  ordered_json conditions;
  conditions["all_nonnormal"] =
      guarded([&] { return scan_json(condition_all_nonnormal(ctx)); });
  conditions["all_nonsubnormal"] =
      guarded([&] { return scan_json(condition_all_nonsubnormal(ctx)); });
  conditions["focal"] = guarded([&] {
    ordered_json per_prime = ordered_json::array();
    for (int p : g->primes()) {
      ordered_json entry{{"prime", p}};
      entry.update(scan_json(condition_focal(ctx, p)));
      per_prime.push_back(std::move(entry));
    }
    return per_prime;
  });
  report["conditions"] = std::move(conditions);

  report["semi_nilpotent"] =
      guarded([&] { return scan_json(is_semi_nilpotent(ctx)); });
  report["classification"] = guarded([&]() -> ordered_json {
    try {
      return classification_json(classify_type(ctx));
    } catch (const TheoremViolation& e) {
      return ordered_json{{"kind", "violation"}, {"detail", e.what()}};
    }
  });
  report["fitting_quotient"] = guarded([&] {
    const auto& q = ctx.quotient_by(ctx.fitting_subgroup());
    return ordered_json{{"order", q.group->order()},
                        {"cyclic", is_cyclic(q.group)}};
  });
  return report;
}

std::string render_analysis_text(const ordered_json& report) {
  std::ostringstream out;
  const auto& group = report["group"];
  out << "group " << group["name"].get<std::string>() << "  (order "
      << group["order"].get<long long>() << ")\n";
  out << "table hash   " << group["table_hash"].get<std::string>() << "\n";
  out << "primes       " << join_ints(group["primes"]) << "\n";

  const auto& flags = report["flags"];
  if (skipped(flags)) {
    out << "flags        skipped (" << flags["skipped"].get<std::string>()
        << ")\n";
  } else {
    out << "flags        abelian=" << yesno(flags["abelian"].get<bool>())
        << " nilpotent=" << yesno(flags["nilpotent"].get<bool>())
        << " soluble=" << yesno(flags["soluble"].get<bool>()) << "\n";
  }

  out << "\n";
  for (const char* key :
       {"centre", "derived", "frattini", "hypercentre", "f0", "fitting"}) {
    out << key << std::string(13 - std::string(key).size(), ' ')
        << set_text(report["subgroups"][key]) << "\n";
  }

  out << "\n";
  const auto& basis = report["sylow_basis"];
  if (basis.is_null()) {
    out << "sylow basis  none\n";
  } else if (skipped(basis)) {
    out << "sylow basis  skipped (" << basis["skipped"].get<std::string>()
        << ")\n";
  } else {
    out << "sylow basis  primes " << join_ints(basis["primes"]) << "\n";
    for (const auto& m : basis["members"])
      out << "  p=" << m["prime"].get<int>() << "  " << set_text(m) << "\n";
  }
  const auto& dispersion = report["dispersion"];
  if (dispersion.is_null())
    out << "dispersion   none\n";
  else if (skipped(dispersion))
    out << "dispersion   skipped (" << dispersion["skipped"].get<std::string>()
        << ")\n";
  else
    out << "dispersion   " << join_ints(dispersion["primes"]) << "\n";

  const auto& carter = report["carter"];
  if (skipped(carter)) {
    out << "carter       skipped (" << carter["skipped"].get<std::string>()
        << ")\n";
  } else {
    out << "carter       class size " << carter["class_size"].get<int>();
    if (!carter["order"].is_null())
      out << ", order " << carter["order"].get<int>();
    out << "\n";
  }
  const auto& schmidt = report["schmidt_count"];
  if (skipped(schmidt))
    out << "schmidt      skipped (" << schmidt["skipped"].get<std::string>()
        << ")\n";
  else
    out << "schmidt      " << schmidt.get<int>() << " subgroup(s)\n";

  out << "\n";
  const auto& conditions = report["conditions"];
  out << "condition on non-normal primary subgroups     "
      << scan_text(conditions["all_nonnormal"]) << "\n";
  out << "condition on non-subnormal primary subgroups  "
      << scan_text(conditions["all_nonsubnormal"]) << "\n";
  const auto& focal = conditions["focal"];
  if (skipped(focal)) {
    out << "condition inside focal subgroups              skipped ("
        << focal["skipped"].get<std::string>() << ")\n";
  } else {
    for (const auto& entry : focal)
      out << "condition inside focal subgroups (p=" << entry["prime"].get<int>()
          << ")       " << scan_text(entry) << "\n";
  }
  out << "semi-nilpotent                                "
      << scan_text(report["semi_nilpotent"]) << "\n";

  out << "\n";
  const auto& cls = report["classification"];
  if (skipped(cls)) {
    out << "classification  skipped (" << cls["skipped"].get<std::string>()
        << ")\n";
  } else {
    const auto kind = cls["kind"].get<std::string>();
    out << "classification  " << kind << "\n";
    if (kind == "TypeB") {
      out << "  r            " << cls["r"].get<int>() << "\n";
      out << "  basis primes " << join_ints(cls["basis"]["primes"]) << "\n";
      out << "  E            " << set_text(cls["e_part"]) << "\n";
      out << "  F0           " << set_text(cls["f0_part"]) << "\n";
      out << "  hypercentre  " << set_text(cls["hypercentre"]) << "\n";
      out << "  carter       " << set_text(cls["carter"]) << "\n";
    } else if (kind == "Fails") {
      out << "  witness      " << witness_text(cls["witness"]) << "\n";
    } else if (kind == "violation") {
      out << "  detail       " << cls["detail"].get<std::string>() << "\n";
    }
  }

  const auto& fq = report["fitting_quotient"];
  if (skipped(fq))
    out << "fitting quotient  skipped (" << fq["skipped"].get<std::string>()
        << ")\n";
  else
    out << "fitting quotient  order " << fq["order"].get<long long>()
        << ", cyclic=" << yesno(fq["cyclic"].get<bool>()) << "\n";
  return out.str();
}

}  // namespace groupcheck
