// Command-line front end: catalog listing, group descriptions, predicate
// checks with chain certificates, and the verification harness.
//
// Exit codes for `check`: 0 = predicate holds, 1 = predicate fails,
// 2 = usage or computation error.  `verify` exits 0 iff the report has zero
// counterexamples and zero per-entry errors.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "submod/analysis.hpp"
#include "submod/catalog.hpp"
#include "submod/formations.hpp"
#include "submod/numtheory.hpp"
#include "submod/verify.hpp"

namespace {

using namespace submod;
using ordered_json = nlohmann::ordered_json;

GroupTable load_group(const std::string& name, const std::string& cayley,
                      const std::string& perm) {
  int sources = (!name.empty()) + (!cayley.empty()) + (!perm.empty());
  if (sources != 1)
    throw Error("exactly one group source required (label, --from-cayley, or --from-perm)");
  if (!cayley.empty()) return parse_cayley_file(cayley);
  if (!perm.empty()) return parse_perm_file(perm);
  for (const auto& e : default_catalog())
    if (e.label == name) {
      GroupTable g = build_group(e.spec);
      g.set_label(e.label);
      return g;
    }
  throw UnknownGroup("not in the catalog: " + name + " (see `list`)");
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

int cmd_list() {
  for (const auto& e : default_catalog()) {
    GroupTable g = build_group(e.spec);
    std::cout << std::left << std::setw(22) << e.label << std::right
              << std::setw(4) << g.order() << "  " << e.spec.to_string()
              << "\n";
  }
  return 0;
}

int cmd_describe(const GroupTable& g, bool as_json, std::size_t budget) {
  GroupAnalysis ctx(g, budget);
  auto& lat = ctx.lattice();
  auto pi = prime_divisors(g.order());
  auto sub_order = [&](int i) { return lat.order_of(i); };
  if (as_json) {
    ordered_json j;
    j["label"] = g.label();
    j["order"] = g.order();
    j["pi"] = pi;
    j["exponent"] = g.exponent();
    j["subgroups"] = lat.size();
    j["center_order"] = sub_order(ctx.center_index());
    j["derived_order"] = sub_order(ctx.derived_index());
    j["fitting_order"] = sub_order(ctx.fitting_index());
    j["frattini_order"] = sub_order(ctx.frattini_index());
    j["solvable"] = ctx.solvable();
    ordered_json cls;
    for (Formation f : registered_formations())
      cls[std::string(formation_token(f))] = in_class(ctx, f);
    j["classes"] = cls;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "label:     " << g.label() << "\n";
  std::cout << "order:     " << g.order() << "\n";
  std::cout << "pi:        " << join_ints(pi) << "\n";
  std::cout << "exponent:  " << g.exponent() << "\n";
  std::cout << "subgroups: " << lat.size() << "\n";
  std::cout << "center:    order " << sub_order(ctx.center_index()) << "\n";
  std::cout << "derived:   order " << sub_order(ctx.derived_index()) << "\n";
  std::cout << "fitting:   order " << sub_order(ctx.fitting_index()) << "\n";
  std::cout << "frattini:  order " << sub_order(ctx.frattini_index()) << "\n";
  std::cout << "solvable:  " << (ctx.solvable() ? "yes" : "no") << "\n";
  std::cout << "classes:\n";
  for (Formation f : registered_formations())
    std::cout << "  " << std::left << std::setw(4)
              << std::string(formation_token(f)) << " " << std::setw(28)
              << std::string(formation_name(f)) << " "
              << std::string(formation_symbol(f)) << ": "
              << (in_class(ctx, f) ? "yes" : "no") << "\n";
  return 0;
}

int subgroup_index(GroupAnalysis& ctx, const std::vector<int>& gens,
                   const char* what) {
  for (int e : gens)
    if (e < 0 || e >= ctx.group().order())
      throw BadSubgroupSpec(std::string(what) + ": element " +
                            std::to_string(e) + " out of range");
  Subgroup s = generated_subgroup(ctx.group(), std::span<const int>(gens));
  int idx = ctx.lattice().index_of(s);
  if (idx < 0) throw Error("generated subgroup missing from lattice");
  return idx;
}

std::string render_chain(GroupAnalysis& ctx, const ChainCertificate& cert) {
  auto& lat = ctx.lattice();
  std::string s;
  for (std::size_t i = 0; i < cert.chain.size(); ++i) {
    int idx = cert.chain[i];
    if (i) s += " < ";
    s += "order " + std::to_string(lat.order_of(idx)) + " <" +
         join_ints(small_generating_set(ctx.group(), lat.members(idx))) + ">";
  }
  return s;
}

void print_subgroup(GroupAnalysis& ctx, int idx, const std::string& head) {
  auto& lat = ctx.lattice();
  std::cout << head << ": order " << lat.order_of(idx) << ", gens <"
            << join_ints(small_generating_set(ctx.group(), lat.members(idx)))
            << ">\n";
}

int cmd_check(const GroupTable& g, const std::string& predicate,
              const std::vector<int>& gens, const std::vector<int>& in_gens,
              const std::string& formation_tok, std::size_t budget) {
  GroupAnalysis ctx(g, budget);
  auto& lat = ctx.lattice();

  auto need_formation = [&] {
    if (formation_tok.empty())
      throw BadSubgroupSpec("predicate requires --formation");
    auto f = parse_formation(formation_tok);
    if (!f) throw UnknownPredicate("unknown formation: " + formation_tok);
    return *f;
  };
  auto h_index = [&] { return subgroup_index(ctx, gens, "--gens"); };
  auto k_index = [&] {
    return in_gens.empty() ? lat.top()
                           : subgroup_index(ctx, in_gens, "--in");
  };

  if (predicate == "modular") {
    bool ok = ctx.is_modular_in(h_index(), k_index());
    std::cout << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : 1;
  }
  if (predicate == "submodular" || predicate == "p-subnormal") {
    int h = h_index(), k = k_index();
    const auto& cert = predicate == "submodular" ? ctx.submodular_chain(h, k)
                                                 : ctx.p_subnormal_chain(h, k);
    if (!cert) {
      std::cout << "no\n";
      return 1;
    }
    std::cout << "yes\nchain: " << render_chain(ctx, *cert) << "\n";
    return 0;
  }
  if (predicate == "residual") {
    auto res = residual(ctx, need_formation());
    print_subgroup(ctx, res.residual, "residual " + formation_tok);
    std::cout << "witnesses: " << res.witnesses.size()
              << " normal subgroup(s)\n";
    return 0;
  }
  if (predicate == "b-operator") {
    print_subgroup(ctx, b_operator(ctx), "b-operator");
    return 0;
  }
  if (predicate == "in-class") {
    Formation f = need_formation();
    int idx = gens.empty() ? lat.top() : h_index();
    bool ok = in_class(ctx, idx, f);
    std::cout << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : 1;
  }
  throw UnknownPredicate(predicate);
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "manifest " << r.manifest_hash << "\n";
  os << "groups " << r.groups.size() << "  counterexamples "
     << r.total_counterexamples() << "  errors " << r.total_errors() << "\n";
  for (const auto& g : r.groups) {
    long cx = 0, conf = 0, vac = 0;
    for (const auto& s : g.suites) {
      cx += static_cast<long>(s.counterexamples.size());
      conf += s.confirmed;
      vac += s.vacuous;
    }
    os << std::left << std::setw(22) << g.label << std::right << " order "
       << std::setw(4) << g.order << "  confirmed " << std::setw(7) << conf
       << "  vacuous " << std::setw(8) << vac << "  cx " << cx << "  ms "
       << g.ms;
    if (!g.error.empty()) os << "  ERROR: " << g.error;
    os << "\n";
  }
  for (const auto& g : r.groups)
    for (const auto& s : g.suites)
      for (const auto& c : s.counterexamples)
        os << "COUNTEREXAMPLE " << g.label << " " << s.id << " " << c.instance
           << "\n";
  return os.str();
}

int cmd_verify(bool use_default, const std::string& manifest_path,
               std::vector<std::string> suites, bool all_suites,
               const std::string& format, int jobs, const std::string& out,
               bool no_timings, bool store_vacuous, std::size_t budget) {
  if (use_default == !manifest_path.empty())
    throw Error("pass exactly one of --default or --manifest");
  std::vector<CatalogEntry> entries =
      use_default ? default_catalog() : parse_manifest_file(manifest_path);
  RunOptions opt;
  if (!all_suites) opt.suites = std::move(suites);
  opt.jobs = jobs;
  opt.store_vacuous = store_vacuous;
  opt.timings = !no_timings;
  opt.budget = budget;
  VerificationReport rep = run_catalog(entries, opt);
  std::string body;
  if (format == "json")
    body = report_to_json(rep);
  else if (format == "csv")
    body = report_to_csv(rep);
  else if (format == "md")
    body = report_to_markdown(rep);
  else
    body = report_to_text(rep);
  if (out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + out);
    f << body;
    if (!f.good()) throw Error("failed writing output file: " + out);
  }
  return rep.total_counterexamples() == 0 && rep.total_errors() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group toolkit: subgroup lattices, modularity chains, "
               "formation residuals, and an exhaustive property verifier"};
  app.require_subcommand(1);

  app.add_subcommand("list", "list the built-in group catalog");

  std::string d_name, d_cayley, d_perm;
  bool d_json = false;
  std::size_t d_budget = SubgroupLattice::kDefaultBudget;
  auto* desc = app.add_subcommand("describe", "print order, primes, key "
                                              "subgroups, and class memberships");
  desc->add_option("group", d_name, "catalog label");
  desc->add_option("--from-cayley", d_cayley, "read a Cayley-table file");
  desc->add_option("--from-perm", d_perm, "read a permutation-generator file");
  desc->add_flag("--json", d_json, "emit JSON instead of text");
  desc->add_option("--budget", d_budget, "subgroup enumeration cap");

  std::string c_name, c_cayley, c_perm, c_pred, c_formation;
  std::vector<int> c_gens, c_in;
  std::size_t c_budget = SubgroupLattice::kDefaultBudget;
  auto* chk = app.add_subcommand(
      "check", "evaluate a predicate: modular | submodular | p-subnormal | "
               "residual | b-operator | in-class");
  chk->add_option("group", c_name, "catalog label (omit with --from-cayley/--from-perm)");
  chk->add_option("predicate", c_pred, "predicate name");
  chk->add_option("--from-cayley", c_cayley, "read a Cayley-table file");
  chk->add_option("--from-perm", c_perm, "read a permutation-generator file");
  chk->add_option("--gens", c_gens, "subgroup generators (element indices)")
      ->delimiter(',');
  chk->add_option("--in", c_in, "ambient subgroup generators (default: whole group)")
      ->delimiter(',');
  chk->add_option("--formation", c_formation,
                  "formation token (Ab, Ab1, N, N2, U, U1, S, A, A1, D, Z, C, "
                  "NA, NA1)");
  chk->add_option("--budget", c_budget, "subgroup enumeration cap");

  bool v_default = false, v_all = false, v_no_timings = false,
       v_store_vacuous = false;
  std::string v_manifest, v_format = "json", v_out;
  std::vector<std::string> v_suites;
  int v_jobs = 1;
  std::size_t v_budget = SubgroupLattice::kDefaultBudget;
  auto* ver = app.add_subcommand("verify",
                                 "run the property suites over a catalog");
  ver->add_flag("--default", v_default, "use the built-in catalog");
  ver->add_option("--manifest", v_manifest, "read a manifest file");
  ver->add_option("--suites", v_suites, "comma-separated suite families")
      ->delimiter(',');
  ver->add_flag("--all-suites", v_all, "run every suite family");
  ver->add_option("--format", v_format, "json | csv | md | text")
      ->check(CLI::IsMember({"json", "csv", "md", "text"}));
  ver->add_option("--jobs", v_jobs, "parallel group tasks")
      ->check(CLI::PositiveNumber);
  ver->add_option("--out", v_out, "write the report to a file");
  ver->add_flag("--no-timings", v_no_timings, "zero the per-group ms fields");
  ver->add_flag("--store-vacuous", v_store_vacuous,
                "store every record, not only counterexamples");
  ver->add_option("--budget", v_budget, "subgroup enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("list")) return cmd_list();
    if (app.got_subcommand("describe"))
      return cmd_describe(load_group(d_name, d_cayley, d_perm), d_json,
                          d_budget);
    if (app.got_subcommand("check")) {
      // with a file source the single positional is the predicate
      if (c_pred.empty()) std::swap(c_pred, c_name);
      if (c_pred.empty()) throw UnknownPredicate("missing predicate");
      return cmd_check(load_group(c_name, c_cayley, c_perm), c_pred, c_gens,
                       c_in, c_formation, c_budget);
    }
    if (app.got_subcommand("verify"))
      return cmd_verify(v_default, v_manifest, v_suites, v_all, v_format,
                        v_jobs, v_out, v_no_timings, v_store_vacuous,
                        v_budget);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
