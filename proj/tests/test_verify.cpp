// Verification harness: factorization-pair enumeration, suite bookkeeping
// (vacuous / confirmed / counterexample), per-group error capture, the
// catalog runner with its thread pool, and the three report formats.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "json.hpp"
#include "submod/catalog.hpp"
#include "submod/verify.hpp"

using namespace submod;

namespace {

GroupTable make(const BuilderSpec& spec) { return build_group(spec); }

const SuiteResult& suite_of(const GroupVerification& gv, const std::string& id) {
  for (const auto& s : gv.suites)
    if (s.id == id) return s;
  REQUIRE(false);
  static SuiteResult dummy;
  return dummy;
}

RunOptions with_suites(std::vector<std::string> fams) {
  RunOptions opt;
  opt.suites = std::move(fams);
  opt.timings = false;
  return opt;
}

}  // namespace

TEST_CASE("verdict names") {
  CHECK(verdict_name(Verdict::Vacuous) == "vacuous");
  CHECK(verdict_name(Verdict::Confirmed) == "confirmed");
  CHECK(verdict_name(Verdict::Counterexample) == "COUNTEREXAMPLE");
}

TEST_CASE("suite family registry is frozen") {
  const auto& fams = all_suite_families();
  CHECK(fams.size() == 15);
  CHECK(fams.front() == "L-SUB");
  CHECK(fams.back() == "C-B2");
  std::size_t parts = 0;
  for (const auto& f : fams) parts += suite_parts(f).size();
  CHECK(parts == 35);
  CHECK(suite_parts("L-SUB").size() == 5);
  CHECK(suite_parts("P-SUP").size() == 7);
  CHECK(suite_parts("L-ZC").size() == 5);
  CHECK(suite_parts("L-RES") ==
        std::vector<std::string>{"L-RES(Ab)", "L-RES(N)", "L-RES(A1)"});
  CHECK_THROWS_AS(suite_parts("NOPE"), Error);
}

TEST_CASE("factorization pairs satisfy the order identity and the set product") {
  GroupAnalysis s3(make(BuilderSpec::symmetric(3)));
  auto pairs = enumerate_factorizations(s3);
  CHECK(pairs.size() == 17);
  auto& lat = s3.lattice();
  const int n = s3.group().order();
  for (const auto& p : pairs) {
    CHECK(p.order_a == lat.order_of(p.a));
    CHECK(p.order_b == lat.order_of(p.b));
    CHECK(p.order_meet == lat.order_of(lat.meet(p.a, p.b)));
    CHECK(p.index_a == n / p.order_a);
    CHECK(p.index_b == n / p.order_b);
    CHECK(p.order_a * p.order_b == n * p.order_meet);
    CHECK(factorizes_by_product(s3.group(), lat.members(p.a), lat.members(p.b)));
  }
  // the trivial decompositions are always present
  auto has = [&](int a, int b) {
    return std::any_of(pairs.begin(), pairs.end(),
                       [&](const FactorizationPair& p) { return p.a == a && p.b == b; });
  };
  CHECK(has(lat.bottom(), lat.top()));
  CHECK(has(lat.top(), lat.bottom()));
  CHECK(has(lat.top(), lat.top()));
  CHECK_FALSE(has(lat.bottom(), lat.bottom()));

  GroupAnalysis f5(make(BuilderSpec::semidirect_cyclic(5, 4, 2)));
  CHECK(enumerate_factorizations(f5).size() == 47);
}

TEST_CASE("order arithmetic and the literal product agree on every subgroup pair") {
  GroupAnalysis f5(make(BuilderSpec::semidirect_cyclic(5, 4, 2)));
  auto& lat = f5.lattice();
  const int n = f5.group().order();
  for (int a = 0; a < lat.size(); ++a)
    for (int b = 0; b < lat.size(); ++b) {
      bool arith = static_cast<long long>(lat.order_of(a)) * lat.order_of(b) ==
                   static_cast<long long>(n) * lat.order_of(lat.meet(a, b));
      CHECK(arith == factorizes_by_product(f5.group(), lat.members(a), lat.members(b)));
    }
}

TEST_CASE("frozen suite counts for the order-20 Frobenius group") {
  GroupVerification gv = verify_group(make(BuilderSpec::semidirect_cyclic(5, 4, 2)),
                                      with_suites({"L-SOLV", "T1", "T2", "L-MAXMOD"}));
  CHECK(gv.error.empty());
  CHECK(gv.order == 20);
  const auto& solv = suite_of(gv, "L-SOLV");
  CHECK(solv.vacuous == 15);
  CHECK(solv.confirmed == 32);
  CHECK(solv.counterexamples.empty());
  // the factor-criteria hypotheses never fire here: the group is outside
  // both conclusion classes, so these are genuine negative controls
  for (const char* id : {"T1(1)", "T1(2)", "T2(1)", "T2(2)"}) {
    const auto& s = suite_of(gv, id);
    CHECK(s.vacuous == 47);
    CHECK(s.confirmed == 0);
    CHECK(s.counterexamples.empty());
  }
  const auto& mm = suite_of(gv, "L-MAXMOD");
  CHECK(mm.vacuous == 0);
  CHECK(mm.confirmed == 1);
}

TEST_CASE("frozen suite counts for S3 and A5") {
  GroupVerification s3 = verify_group(make(BuilderSpec::symmetric(3)),
                                      with_suites({"P-SUP", "C-B2", "T1", "L-NN"}));
  CHECK(suite_of(s3, "P-SUP(1)").confirmed == 17);
  CHECK(suite_of(s3, "P-SUP(5)").confirmed == 10);
  CHECK(suite_of(s3, "P-SUP(5)").vacuous == 7);
  CHECK(suite_of(s3, "C-B2").confirmed == 6);
  CHECK(suite_of(s3, "T1(1)").confirmed == 17);
  CHECK(suite_of(s3, "T1(1)").vacuous == 0);
  CHECK(suite_of(s3, "L-NN(1)").confirmed == 5);
  CHECK(suite_of(s3, "L-NN(2)").confirmed == 5);

  GroupVerification a5 = verify_group(make(BuilderSpec::alternating(5)),
                                      with_suites({"L-MAXMOD", "L-SOLV"}));
  CHECK(suite_of(a5, "L-MAXMOD").confirmed == 1);
  CHECK(suite_of(a5, "L-MAXMOD").vacuous == 0);
  // a non-solvable group still emits one record per factorization pair
  CHECK(suite_of(a5, "L-SOLV").vacuous == 237);
  CHECK(suite_of(a5, "L-SOLV").confirmed == 0);
}

TEST_CASE("an all-family run covers every part and finds no counterexamples") {
  for (auto spec : {BuilderSpec::semidirect_cyclic(5, 4, 2), BuilderSpec::symmetric(4),
                    BuilderSpec::alternating(5), BuilderSpec::dicyclic(12)}) {
    RunOptions opt;
    opt.timings = false;
    GroupVerification gv = verify_group(make(spec), opt);
    CHECK(gv.error.empty());
    CHECK(gv.suites.size() == 35);
    long cx = 0;
    for (const auto& s : gv.suites) cx += static_cast<long>(s.counterexamples.size());
    CHECK(cx == 0);
    // suite order is the canonical family order
    std::vector<std::string> expect;
    for (const auto& f : all_suite_families())
      for (const auto& p : suite_parts(f)) expect.push_back(p);
    std::vector<std::string> got;
    for (const auto& s : gv.suites) got.push_back(s.id);
    CHECK(got == expect);
    CHECK(gv.ms == 0);  // timings disabled
  }
}

TEST_CASE("stored records spell out hypothesis, conclusion and verdict coherently") {
  RunOptions opt = with_suites({"T1", "L-SUB"});
  opt.store_vacuous = true;
  GroupVerification gv = verify_group(make(BuilderSpec::semidirect_cyclic(5, 4, 2)), opt);
  for (const auto& s : gv.suites) {
    CHECK(static_cast<long>(s.details.size()) == s.vacuous + s.confirmed);
    for (const auto& r : s.details) {
      CHECK(r.suite == s.id);
      CHECK_FALSE(r.instance.empty());
      Verdict expect = !r.hypothesis_held
                           ? Verdict::Vacuous
                           : (r.conclusion_held ? Verdict::Confirmed : Verdict::Counterexample);
      CHECK(r.verdict == expect);
      CHECK(r.verdict != Verdict::Counterexample);
    }
  }
  // without the flag the details stay empty
  GroupVerification lean = verify_group(make(BuilderSpec::semidirect_cyclic(5, 4, 2)),
                                        with_suites({"T1"}));
  for (const auto& s : lean.suites) CHECK(s.details.empty());
}

TEST_CASE("analysis failures are captured per group, not thrown") {
  RunOptions opt;
  opt.timings = false;
  opt.budget = 5;  // S4 has 30 subgroups
  GroupVerification gv = verify_group(make(BuilderSpec::symmetric(4)), opt);
  CHECK_FALSE(gv.error.empty());
  CHECK(gv.suites.empty());
  CHECK(gv.label == "S4");
  CHECK(gv.order == 24);
}

TEST_CASE("unknown suite names fail fast in the catalog runner") {
  CHECK_THROWS_AS(run_catalog({{"C2", BuilderSpec::cyclic(2)}}, with_suites({"NOPE"})), Error);
}

TEST_CASE("the catalog runner preserves order and isolates broken entries") {
  std::vector<CatalogEntry> entries = {
      {"ok-one", BuilderSpec::cyclic(6)},
      {"broken", BuilderSpec::from_file("missing_file_xyz.txt")},
      {"ok-two", BuilderSpec::symmetric(3)},
  };
  VerificationReport rep = run_catalog(entries, with_suites({"L-SUB", "L-MAXMOD"}));
  REQUIRE(rep.groups.size() == 3);
  CHECK(rep.groups[0].label == "ok-one");
  CHECK(rep.groups[0].error.empty());
  CHECK_FALSE(rep.groups[0].suites.empty());
  CHECK(rep.groups[1].label == "broken");
  CHECK_FALSE(rep.groups[1].error.empty());
  CHECK(rep.groups[1].suites.empty());
  CHECK(rep.groups[2].label == "ok-two");
  CHECK(rep.groups[2].error.empty());
  CHECK(rep.total_errors() == 1);
  CHECK(rep.total_counterexamples() == 0);
  CHECK(rep.manifest_hash == manifest_hash(entries));
}

TEST_CASE("an empty manifest produces an empty but well-formed report") {
  VerificationReport rep = run_catalog({}, with_suites({}));
  CHECK(rep.groups.empty());
  CHECK(rep.manifest_hash.size() == 16);
  CHECK(rep.total_counterexamples() == 0);
  CHECK(rep.total_errors() == 0);
}

TEST_CASE("parallel runs produce byte-identical reports") {
  auto cat = default_catalog();
  std::vector<CatalogEntry> subset(cat.begin(), cat.begin() + 12);
  RunOptions seq = with_suites({"L-SUB", "T1", "L-MAXMOD"});
  RunOptions par = seq;
  par.jobs = 4;
  std::string a = report_to_json(run_catalog(subset, seq));
  std::string b = report_to_json(run_catalog(subset, par));
  CHECK(a == b);
}

TEST_CASE("json report round-trips through a parser with the expected schema") {
  std::vector<CatalogEntry> entries = {{"S3", BuilderSpec::symmetric(3)},
                                       {"bad", BuilderSpec::from_file("nope.txt")}};
  RunOptions opt = with_suites({"L-MAXMOD"});
  VerificationReport rep = run_catalog(entries, opt);
  auto j = nlohmann::json::parse(report_to_json(rep));
  CHECK(j["manifest_hash"] == rep.manifest_hash);
  REQUIRE(j["groups"].size() == 2);
  CHECK(j["groups"][0]["label"] == "S3");
  CHECK(j["groups"][0]["order"] == 6);
  CHECK_FALSE(j["groups"][0].contains("error"));
  REQUIRE(j["groups"][0]["suites"].size() == 1);
  CHECK(j["groups"][0]["suites"][0]["id"] == "L-MAXMOD");
  CHECK(j["groups"][0]["suites"][0]["vacuous"] == 0);
  CHECK(j["groups"][0]["suites"][0]["confirmed"] == 4);
  CHECK(j["groups"][0]["suites"][0]["counterexamples"].is_array());
  CHECK(j["groups"][0]["suites"][0]["counterexamples"].empty());
  CHECK_FALSE(j["groups"][0]["suites"][0].contains("records"));
  CHECK(j["groups"][0]["ms"] == 0);
  CHECK(j["groups"][1].contains("error"));

  // stored records appear under "records"
  RunOptions verbose = opt;
  verbose.store_vacuous = true;
  auto jv = nlohmann::json::parse(
      report_to_json(run_catalog({{"S3", BuilderSpec::symmetric(3)}}, verbose)));
  CHECK(jv["groups"][0]["suites"][0]["records"].size() == 4);
  CHECK(jv["groups"][0]["suites"][0]["records"][0].contains("instance"));
  CHECK(jv["groups"][0]["suites"][0]["records"][0]["verdict"] == "confirmed");
}

TEST_CASE("csv report has one row per group-suite pair") {
  VerificationReport rep = run_catalog({{"S3", BuilderSpec::symmetric(3)},
                                        {"C4", BuilderSpec::cyclic(4)}},
                                       with_suites({"T1", "L-MAXMOD"}));
  std::string csv = report_to_csv(rep);
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < csv.size()) {
    auto end = csv.find('\n', start);
    if (end == std::string::npos) end = csv.size();
    lines.push_back(csv.substr(start, end - start));
    start = end + 1;
  }
  REQUIRE(lines.size() == 7);  // header + 2 groups x 3 parts
  CHECK(lines[0] == "suite,group,vacuous,confirmed,counterexamples");
  CHECK(lines[1] == "T1(1),S3,0,17,0");
  CHECK(lines[3] == "L-MAXMOD,S3,0,4,0");
}

TEST_CASE("markdown digest reports totals and the all-clear") {
  VerificationReport rep =
      run_catalog({{"S3", BuilderSpec::symmetric(3)}}, with_suites({"L-MAXMOD"}));
  std::string md = report_to_markdown(rep);
  CHECK(md.find("# Verification report") != std::string::npos);
  CHECK(md.find(rep.manifest_hash) != std::string::npos);
  CHECK(md.find("1 groups, 0 counterexamples, 0 errors.") != std::string::npos);
  CHECK(md.find("| L-MAXMOD | 0 | 4 | 0 |") != std::string::npos);
}

TEST_CASE("report totals aggregate hand-built records") {
  VerificationReport rep;
  rep.manifest_hash = "x";
  GroupVerification a;
  a.label = "g1";
  SuiteResult s;
  s.id = "T1(1)";
  s.counterexamples.push_back({"T1(1)", "inst", true, false, Verdict::Counterexample});
  a.suites.push_back(s);
  GroupVerification b;
  b.label = "g2";
  b.error = "boom";
  rep.groups = {a, b};
  CHECK(rep.total_counterexamples() == 1);
  CHECK(rep.total_errors() == 1);
}

TEST_CASE("timings are recorded only when requested") {
  RunOptions timed = with_suites({"L-MAXMOD"});
  timed.timings = true;
  VerificationReport rep =
      run_catalog({{"S4", BuilderSpec::symmetric(4)}}, timed);
  CHECK(rep.groups[0].ms >= 0);
  auto j = nlohmann::json::parse(report_to_json(rep));
  CHECK(j["groups"][0].contains("ms"));
}
