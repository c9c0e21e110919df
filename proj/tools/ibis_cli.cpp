#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <set>

#include "ibislin/groupspec.hpp"

using namespace ibislin;
using nlohmann::json;

namespace {

constexpr int kExitMalformed = 2;
constexpr int kExitBudget = 3;

json criterion_json(const MetacyclicSubgroup& G) {
  CriterionVerdict v = theorem13(G);
  json j;
  j["is_ibis"] = v.is_ibis;
  j["order"] = G.order();
  j["h_order"] = G.h_order();
  j["b_dlog"] = G.b_dlog % G.d;
  switch (v.kind) {
    case CriterionVerdict::Kind::frobenius_complement: j["kind"] = "frobenius_complement"; break;
    case CriterionVerdict::Kind::uniform_stabilizer: j["kind"] = "uniform_stabilizer"; break;
    case CriterionVerdict::Kind::fixed_vector: j["kind"] = "fixed_vector"; break;
    case CriterionVerdict::Kind::not_ibis: j["kind"] = "not_ibis"; break;
  }
  j["r"] = v.witnesses_r;
  if (v.s)
    j["s"] = *v.s;
  else
    j["s"] = nullptr;
  if (!v.is_ibis) {
    json fails = json::array();
    for (const auto& f : v.failures) fails.push_back({{"r", f.r}, {"failed_condition", f.failed_condition}});
    j["failures"] = fails;
  }
  return j;
}

struct Budgets {
  u64 max_order = kDefaultClosureBudget;
  u64 max_irr_nodes = u64(1) << 22;
  u64 probe_trials = 10000;
  u64 seed = 0x1B15;

  IbisBudget ibis() const { return {max_irr_nodes, probe_trials, seed}; }
};

int run_analyze(const std::string& spec_text, const std::string& method, const Budgets& bud) {
  auto spec = GroupSpec::parse(spec_text);
  if (!spec) {
    std::cerr << "error: malformed group spec\n";
    return kExitMalformed;
  }
  BuiltGroup g;
  try {
    g = build_group(*spec, bud.max_order);
  } catch (const BudgetExceeded& ex) {
    std::cerr << "error: budget: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const Error& ex) {
    std::cerr << "error: malformed group spec: " << ex.what() << "\n";
    return kExitMalformed;
  }
  try {
    if (method == "criterion") {
      if (!g.meta) {
        std::cerr << "error: method criterion requires a gamma_metacyclic spec\n";
        return kExitMalformed;
      }
      std::cout << criterion_json(*g.meta).dump() << "\n";
      return 0;
    }
    if (!g.action) {
      std::cerr << "error: budget: explicit action unavailable at this size\n";
      return kExitBudget;
    }
    IbisReport r = (method == "pipeline") ? is_ibis_pipeline(*g.action, bud.ibis())
                                          : is_ibis_bruteforce(*g.action, bud.ibis());
    std::cout << r.to_json().dump() << "\n";
    return 0;
  } catch (const BudgetExceeded& ex) {
    std::cerr << "error: budget: " << ex.what() << "\n";
    return kExitBudget;
  }
}

int run_scan(u64 p, u64 e, u64 n, bool compare, const Budgets& bud) {
  FieldTower t = FieldTower::make(p, static_cast<unsigned>(e), static_cast<unsigned>(n));
  const u64 M = t.group_order();
  std::set<std::pair<u64, u64>> seen;
  bool all_agree = true;
  for (u64 d = 1; d <= M; ++d) {
    if (M % d != 0) continue;
    for (u64 b = 0; b < d; ++b) {
      MetacyclicSubgroup G = make_metacyclic(t, d, b);
      auto key = std::make_pair(G.d, G.b_dlog % G.d);
      if (!seen.insert(key).second) continue;
      json line;
      line["p"] = p;
      line["e"] = e;
      line["n"] = n;
      line["h_order"] = G.h_order();
      line["b_dlog"] = key.second;
      CriterionVerdict v = theorem13(G);
      line["criterion_ibis"] = v.is_ibis;
      if (compare) {
        IbisReport r = is_ibis_bruteforce(as_action_group(G, bud.max_order), bud.ibis());
        line["oracle_ibis"] = r.is_ibis;
        line["agree"] = (r.is_ibis == v.is_ibis);
        if (r.is_ibis != v.is_ibis) all_agree = false;
      }
      std::cout << line.dump() << "\n";
    }
  }
  return all_agree ? 0 : 1;
}

int run_gallery(bool run, bool list) {
  int failures = 0;
  for (const GalleryEntry& ge : gallery()) {
    if (list && !run) {
      std::cout << ge.name << "\n";
      continue;
    }
    bool ok = true;
    std::string why;
    u64 order = ge.group.order();
    if (order != ge.expected_order) {
      ok = false;
      why = "order " + std::to_string(order) + " != " + std::to_string(ge.expected_order);
    }
    CriterionVerdict v = theorem13(ge.group);
    if (ok && v.is_ibis != ge.expected_ibis) {
      ok = false;
      why = "criterion verdict mismatch";
    }
    if (ok && ge.expected_s && (!v.s || *v.s != *ge.expected_s)) {
      ok = false;
      why = "stabilizer order mismatch";
    }
    if (ok && !ge.oracle_skipped) {
      IbisReport r = is_ibis_bruteforce(as_action_group(ge.group));
      if (r.is_ibis != ge.expected_ibis) {
        ok = false;
        why = "oracle verdict mismatch";
      }
    }
    std::cout << (ok ? "PASS" : "FAIL") << " " << ge.name
              << (ge.oracle_skipped ? " (criterion only)" : "") << (ok ? "" : ": " + why) << "\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

int run_construct(const std::string& family, u64 r, const std::string& variant, u64 c, u64 p, u64 e,
                  u64 k) {
  GroupSpec spec;
  if (family == "prop16") {
    spec.kind = GroupSpec::Kind::prop16;
    spec.r = r;
    spec.variant = (variant == "P2") ? Prop16Variant::P2 : Prop16Variant::P1;
    spec.c_sel = static_cast<unsigned>(c);
  } else if (family == "prop17") {
    spec.kind = GroupSpec::Kind::wreath_prop17;
    spec.p = p;
    spec.e = e;
    spec.k_exp = k;
  } else {
    std::cerr << "error: unknown family\n";
    return kExitMalformed;
  }
  try {
    BuiltGroup g = build_group(spec);
    json j;
    j["spec"] = spec.print();
    j["order"] = g.action->order();
    j["omega"] = g.action->omega;
    std::cout << j.dump() << "\n";
    return 0;
  } catch (const BudgetExceeded& ex) {
    std::cerr << "error: budget: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const Error& ex) {
    std::cerr << "error: malformed group spec: " << ex.what() << "\n";
    return kExitMalformed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IBIS classification of finite linear groups on V \\ {0}"};
  app.require_subcommand(1);

  Budgets bud;
  app.add_option("--max-order", bud.max_order, "closure/action element budget");
  app.add_option("--max-irr-nodes", bud.max_irr_nodes, "oracle DFS node budget");
  app.add_option("--probe-trials", bud.probe_trials, "random probes in pipeline stage 2");
  app.add_option("--seed", bud.seed, "seed for the randomized pipeline stage");

  std::string spec_text, method = "bruteforce";
  auto* analyze = app.add_subcommand("analyze", "IBIS verdict for one group");
  analyze->add_option("--group", spec_text, "group spec")->required();
  analyze->add_option("--method", method, "bruteforce|pipeline|criterion")
      ->check(CLI::IsMember({"bruteforce", "pipeline", "criterion"}));

  u64 sp = 2, se = 1, sn = 2;
  bool compare = false;
  auto* scan = app.add_subcommand("scan", "all metacyclic subgroup classes of Gamma(q^n)");
  scan->add_option("--p", sp)->required();
  scan->add_option("--e", se);
  scan->add_option("--n", sn)->required();
  scan->add_flag("--compare", compare, "also run the brute-force oracle per class");

  bool grun = false, glist = false;
  auto* gal = app.add_subcommand("gallery", "run the named example expectations");
  gal->add_flag("--run", grun);
  gal->add_flag("--list", glist);

  std::string family, variant = "P1";
  u64 cr = 3, cc = 0, cp = 3, ce = 1, ck = 1;
  auto* con = app.add_subcommand("construct", "build an example-family group");
  con->add_option("--family", family, "prop16|prop17")->required();
  con->add_option("--r", cr, "Mersenne prime (prop16)");
  con->add_option("--variant", variant, "P1|P2 (prop16)");
  con->add_option("--c", cc, "C subgroup selector (prop16)");
  con->add_option("--p", cp, "field characteristic (prop17)");
  con->add_option("--e", ce, "field exponent (prop17)");
  con->add_option("--k", ck, "dlog of k (prop17)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(spec_text, method, bud);
    if (*scan) return run_scan(sp, se, sn, compare, bud);
    if (*gal) return run_gallery(grun || !glist, glist);
    if (*con) return run_construct(family, cr, variant, cc, cp, ce, ck);
  } catch (const BudgetExceeded& ex) {
    std::cerr << "error: budget: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitMalformed;
  }
  return 0;
}
