#pragma once
// Statement-verification harness.  Each suite quantifies over the bindings
// named in one statement (factor pairs, subgroups, normal subgroups, class
// ids), evaluates hypothesis and conclusion independently, and emits one
// record per binding.  A record is a counterexample exactly when the
// hypothesis holds and the conclusion fails; suites never throw on
// mathematical failures — they record them.
//
// Suite families and their parts:
//   L-SUB     (1)..(5)   submodularity: transitivity, intersection into a
//                        subgroup, lifting along quotients (down and up),
//                        subnormal implies submodular
//   L-MAXMOD             structure of maximal modular subgroups
//   L-PRIM    (structure) solvable primitive groups: trivial Frattini,
//                        unique self-centralizing minimal normal = Fitting,
//                        complemented by the core-free maximal subgroup
//             (reduction) a solvable group outside a saturated class with
//                        all proper quotients inside it is primitive
//   L-SOLV               solvable submodular factor + solvable factor
//                        force a solvable product
//   L-PSN                submodular subgroups of solvable groups are
//                        reachable by prime-index steps
//   L-ZC      (inclusion computed Z inside C inside D; identity
//              /identity  Z = NA meet C = NA1 meet C; subgroup, quotient and
//              /subgroups Frattini-quotient closure of Z and C)
//              /quotients
//              /saturation
//   L-RES     (Ab/N/A1)  residual of an image equals image of the residual
//   L-TOWER              factor pair in D forces the product into D
//   L-NN      (1)/(2)    submodular A in Z (resp. C) times nilpotent normal
//                        B forces G into Z (resp. C)
//   P-SUP     (1)..(6)   supersolvability criteria for products of
//                        supersolvable submodular factors
//             (res)      U-residual = N2-residual meet B(G) under coprime
//                        indices or nilpotent A-residual
//   T1        (1)/(2)    Z-factor criteria (coprime Fitting-cofactor
//                        indices; coprime A1-residual quotient orders)
//   T2        (1)/(2)    C-factor criterion and nilpotent-A-residual
//                        criterion
//   C-A1, C-B1, C-B2     coprime-index, nilpotent-A1-residual, and
//                        nilpotent-factor corollaries

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "submod/analysis.hpp"
#include "submod/catalog.hpp"
#include "submod/formations.hpp"

namespace submod {

enum class Verdict { Vacuous, Confirmed, Counterexample };
std::string_view verdict_name(Verdict v);

struct CheckRecord {
  std::string suite;     // part id, e.g. "L-SUB(1)"
  std::string instance;  // bound variables, human-readable
  bool hypothesis_held = false;
  bool conclusion_held = false;
  Verdict verdict = Verdict::Vacuous;
};

// all ordered pairs (A, B) with |A||B| = |G||A meet B|
struct FactorizationPair {
  int a = 0, b = 0;
  int order_a = 0, order_b = 0, order_meet = 0;
  int index_a = 0, index_b = 0;
};
std::vector<FactorizationPair> enumerate_factorizations(GroupAnalysis& ctx);
// literal set-product check AB = G, used as the oracle counterpart
bool factorizes_by_product(const GroupTable& g, const ElemSet& a, const ElemSet& b);

struct SuiteResult {
  std::string id;  // part id
  long vacuous = 0;
  long confirmed = 0;
  std::vector<CheckRecord> counterexamples;
  std::vector<CheckRecord> details;  // populated only with store_vacuous
};

struct GroupVerification {
  std::string label;
  int order = 0;
  std::string error;  // nonempty: entry failed to build or analyze
  std::vector<SuiteResult> suites;
  long long ms = 0;
};

struct VerificationReport {
  std::string manifest_hash;
  std::vector<GroupVerification> groups;
  long total_counterexamples() const;
  long total_errors() const;
};

// family ids, in canonical order
const std::vector<std::string>& all_suite_families();
// part ids of one family, in canonical order
std::vector<std::string> suite_parts(const std::string& family);

struct RunOptions {
  std::vector<std::string> suites;  // family ids; empty means all
  int jobs = 1;
  bool store_vacuous = false;
  bool timings = true;
  std::size_t budget = SubgroupLattice::kDefaultBudget;
};

// run the selected suite families on one prebuilt group
GroupVerification verify_group(const GroupTable& g, const RunOptions& opt);
// build every entry and verify it; one task per group up to opt.jobs
VerificationReport run_catalog(const std::vector<CatalogEntry>& entries,
                               const RunOptions& opt);

std::string report_to_json(const VerificationReport& r);
std::string report_to_csv(const VerificationReport& r);
std::string report_to_markdown(const VerificationReport& r);

}  // namespace submod
