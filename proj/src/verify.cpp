#include "submod/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "submod/numtheory.hpp"

namespace submod {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string sub_desc(SubgroupLattice& lat, int i) {
  return "#" + std::to_string(i) + "(order " + std::to_string(lat.order_of(i)) +
         ")";
}

class Recorder {
 public:
  Recorder(std::vector<SuiteResult>& out, bool store_vacuous)
      : out_(out), store_(store_vacuous) {}

  SuiteResult& part(const std::string& id) {
    auto it = index_.find(id);
    if (it == index_.end()) {
      out_.push_back(SuiteResult{id, 0, 0, {}, {}});
      it = index_.emplace(id, out_.size() - 1).first;
    }
    return out_[it->second];
  }

  template <class InstanceFn>
  void add(const std::string& id, bool hyp, bool concl, InstanceFn&& instance) {
    auto& s = part(id);
    Verdict v = !hyp ? Verdict::Vacuous
                     : (concl ? Verdict::Confirmed : Verdict::Counterexample);
    if (v == Verdict::Vacuous)
      ++s.vacuous;
    else if (v == Verdict::Confirmed)
      ++s.confirmed;
    if (v == Verdict::Counterexample || store_) {
      CheckRecord rec{id, instance(), hyp, concl, v};
      if (v == Verdict::Counterexample) s.counterexamples.push_back(rec);
      if (store_) s.details.push_back(std::move(rec));
    }
  }

 private:
  std::vector<SuiteResult>& out_;
  std::map<std::string, std::size_t> index_;
  bool store_;
};

// --- L-SUB: closure properties of submodularity ----------------------------

void suite_l_sub(GroupAnalysis& ctx, Recorder& rec) {
  auto& lat = ctx.lattice();
  const int top = lat.top();
  // (1) H submodular in K and K submodular in G force H submodular in G
  for (int k = 0; k < lat.size(); ++k)
    for (int h : lat.below(k))
      rec.add("L-SUB(1)",
              ctx.is_submodular(h, k) && ctx.is_submodular(k, top),
              ctx.is_submodular(h, top), [&] {
                return "H=" + sub_desc(lat, h) + ", K=" + sub_desc(lat, k);
              });
  // (2) H submodular in G forces H meet K submodular in K
  for (int h = 0; h < lat.size(); ++h) {
    bool hs = ctx.is_submodular(h, top);
    for (int k = 0; k < lat.size(); ++k)
      rec.add("L-SUB(2)", hs, ctx.is_submodular(lat.meet(h, k), k), [&] {
        return "H=" + sub_desc(lat, h) + ", K=" + sub_desc(lat, k);
      });
  }
  // (3) H/N submodular in G/N forces H submodular in G
  for (int n : lat.normal_indices()) {
    auto& qa = ctx.quotient_analysis(n);
    for (int h = 0; h < lat.size(); ++h) {
      if (!lat.leq(n, h)) continue;
      int img = ctx.image_in_quotient(n, h);
      rec.add("L-SUB(3)", qa.is_submodular(img, qa.top()),
              ctx.is_submodular(h, top), [&] {
                return "H=" + sub_desc(lat, h) + ", N=" + sub_desc(lat, n);
              });
    }
  }
  // (4) H submodular in G forces HN/N submodular in G/N and HN submodular in G
  for (int n : lat.normal_indices()) {
    auto& qa = ctx.quotient_analysis(n);
    for (int h = 0; h < lat.size(); ++h) {
      bool hyp = ctx.is_submodular(h, top);
      bool concl = qa.is_submodular(ctx.image_in_quotient(n, h), qa.top()) &&
                   ctx.is_submodular(lat.join(h, n), top);
      rec.add("L-SUB(4)", hyp, concl, [&] {
        return "H=" + sub_desc(lat, h) + ", N=" + sub_desc(lat, n);
      });
    }
  }
  // (5) subnormal forces submodular
  for (int h = 0; h < lat.size(); ++h)
    rec.add("L-SUB(5)", ctx.is_subnormal(h, top), ctx.is_submodular(h, top),
            [&] { return "H=" + sub_desc(lat, h); });
}

// --- L-MAXMOD: maximal modular subgroups classify -------------------------

void suite_l_maxmod(GroupAnalysis& ctx, Recorder& rec) {
  auto& lat = ctx.lattice();
  for (int m : ctx.maximal_modular_subgroups(lat.top())) {
    bool concl = true;
    std::string branch;
    try {
      switch (ctx.check_maximal_modular_structure(m)) {
        case MaxModBranch::NormalSimpleQuotient:
          branch = "normal with simple quotient";
          break;
        case MaxModBranch::PQNonabelianQuotient:
          branch = "non-abelian semiprime quotient by core";
          break;
      }
    } catch (const LemmaViolated&) {
      concl = false;
      branch = "unclassified";
    }
    rec.add("L-MAXMOD", true, concl,
            [&] { return "M=" + sub_desc(lat, m) + " -> " + branch; });
  }
}

// --- L-PRIM: solvable primitive groups -------------------------------------

void suite_l_prim(GroupAnalysis& ctx, Recorder& rec) {
  auto& lat = ctx.lattice();
  bool solv = ctx.solvable();
  for (int m : lat.maximal_subgroups(lat.top())) {
    bool hyp = solv && lat.core_index(m) == lat.bottom();
    bool concl = ctx.frattini_index() == lat.bottom();
    auto mins = lat.minimal_normals();
    concl = concl && mins.size() == 1;
    if (mins.size() == 1) {
      int n0 = mins.front();
      int fit = ctx.fitting_index();
      int p = prime_power_base(lat.order_of(n0));
      concl = concl && n0 == fit && p != 0;
      concl = concl &&
              lat.index_of(centralizer(ctx.group(), lat.members(n0))) == n0;
      concl = concl && lat.meet(fit, m) == lat.bottom() &&
              lat.order_of(fit) * lat.order_of(m) == ctx.group().order();
      if (concl) {
        // the complement has no nontrivial normal p-subgroup
        auto& ma = ctx.member_analysis(m);
        auto& mlat = ma.lattice();
        for (int nn : mlat.normal_indices())
          if (nn != mlat.bottom() && prime_power_base(mlat.order_of(nn)) == p) {
            concl = false;
            break;
          }
      }
    }
    rec.add("L-PRIM(structure)", hyp, concl,
            [&] { return "M=" + sub_desc(lat, m); });
  }
  // a solvable group outside a saturated class whose proper quotients all
  // lie inside it must have a core-free maximal subgroup
  for (Formation f : registered_formations()) {
    if (!formation_is_saturated(f)) continue;
    bool hyp = solv && !in_class(ctx, f);
    if (hyp)
      for (int n : lat.normal_indices()) {
        if (n == lat.bottom()) continue;
        if (!in_class(ctx.quotient_analysis(n), f)) {
          hyp = false;
          break;
        }
      }
    rec.add("L-PRIM(reduction)", hyp, lat.primitive_witness().has_value(),
            [&] { return "f=" + std::string(formation_token(f)); });
  }
}

// --- L-SOLV ---------------------------------------------------------------

void suite_l_solv(GroupAnalysis& ctx,
                  const std::vector<FactorizationPair>& pairs, Recorder& rec) {
  auto& lat = ctx.lattice();
  const int top = lat.top();
  for (const auto& p : pairs) {
    bool hyp = in_class(ctx, p.a, Formation::Solvable) &&
               ctx.is_submodular(p.a, top) &&
               in_class(ctx, p.b, Formation::Solvable);
    rec.add("L-SOLV", hyp, ctx.solvable(), [&] {
      return "A=" + sub_desc(lat, p.a) + ", B=" + sub_desc(lat, p.b);
    });
  }
}

// --- L-PSN ------------------------------------------------------------------

void suite_l_psn(GroupAnalysis& ctx, Recorder& rec) {
  auto& lat = ctx.lattice();
  const int top = lat.top();
  bool solv = ctx.solvable();
  for (int h = 0; h < lat.size(); ++h)
    rec.add("L-PSN", solv && ctx.is_submodular(h, top),
            ctx.is_p_subnormal(h, top),
            [&] { return "H=" + sub_desc(lat, h); });
}

// --- L-ZC --------------------------------------------------------------------

void suite_l_zc(GroupAnalysis& ctx, Recorder& rec) {
  auto& lat = ctx.lattice();
  bool z = in_class(ctx, Formation::Z);
  bool c = in_class(ctx, Formation::C);
  bool d = in_class(ctx, Formation::SylowTowerSup);
  rec.add("L-ZC(inclusion)", z, c, [] { return std::string("Z inside C"); });
  rec.add("L-ZC(inclusion)", c, d, [] { return std::string("C inside D"); });
  bool na = in_class(ctx, Formation::NilpotentByAbelianSylow);
  bool na1 = in_class(ctx, Formation::NilpotentByAbelianSylowSqf);
  rec.add("L-ZC(identity)", true, z == (na && c),
          [] { return std::string("Z = NA meet C"); });
  rec.add("L-ZC(identity)", true, z == (na1 && c),
          [] { return std::string("Z = NA1 meet C"); });
  const std::pair<Formation, bool> fs[] = {{Formation::Z, z},
                                           {Formation::C, c}};
  for (auto [f, in_f] : fs) {
    std::string tok(formation_token(f));
    for (int h = 0; h < lat.size(); ++h)
      rec.add("L-ZC(subgroups)", in_f, in_class(ctx, h, f),
              [&] { return "f=" + tok + ", H=" + sub_desc(lat, h); });
    for (int n : lat.normal_indices())
      rec.add("L-ZC(quotients)", in_f,
              in_class(ctx.quotient_analysis(n), f),
              [&] { return "f=" + tok + ", N=" + sub_desc(lat, n); });
    rec.add("L-ZC(saturation)", frattini_quotient_in(ctx, f), in_f,
            [&] { return "f=" + tok; });
  }
}

// --- L-RES: residual of an image = image of the residual --------------------

void suite_l_res(GroupAnalysis& ctx, Recorder& rec) {
  auto& lat = ctx.lattice();
  const std::pair<Formation, const char*> fs[] = {
      {Formation::Abelian, "L-RES(Ab)"},
      {Formation::Nilpotent, "L-RES(N)"},
      {Formation::AbelianSylowSqf, "L-RES(A1)"}};
  for (auto [f, id] : fs)
    for (int n : lat.normal_indices()) {
      auto& qa = ctx.quotient_analysis(n);
      for (int a = 0; a < lat.size(); ++a) {
        int img = ctx.image_in_quotient(n, a);
        int lhs = member_residual_idx(qa, img, f);
        int rhs = ctx.image_in_quotient(n, member_residual_idx(ctx, a, f));
        rec.add(id, true, lhs == rhs, [&] {
          return "A=" + sub_desc(lat, a) + ", N=" + sub_desc(lat, n);
        });
      }
    }
}

// --- L-TOWER ------------------------------------------------------------------

void suite_l_tower(GroupAnalysis& ctx,
                   const std::vector<FactorizationPair>& pairs, Recorder& rec) {
  auto& lat = ctx.lattice();
  const int top = lat.top();
  bool concl = in_class(ctx, Formation::SylowTowerSup);
  for (const auto& p : pairs) {
    bool hyp = ctx.is_submodular(p.a, top) && ctx.is_submodular(p.b, top) &&
               in_class(ctx, p.a, Formation::SylowTowerSup) &&
               in_class(ctx, p.b, Formation::SylowTowerSup);
    rec.add("L-TOWER", hyp, concl, [&] {
      return "A=" + sub_desc(lat, p.a) + ", B=" + sub_desc(lat, p.b);
    });
  }
}

// --- L-NN -----------------------------------------------------------------------

void suite_l_nn(GroupAnalysis& ctx,
                const std::vector<FactorizationPair>& pairs, Recorder& rec) {
  auto& lat = ctx.lattice();
  const int top = lat.top();
  for (const auto& p : pairs) {
    bool base = ctx.is_submodular(p.a, top) &&
                in_class(ctx, p.b, Formation::Nilpotent) &&
                lat.is_normal_in_group(p.b);
    auto inst = [&] {
      return "A=" + sub_desc(lat, p.a) + ", B=" + sub_desc(lat, p.b);
    };
    rec.add("L-NN(1)", base && in_class(ctx, p.a, Formation::Z),
            in_class(ctx, Formation::Z), inst);
    rec.add("L-NN(2)", base && in_class(ctx, p.a, Formation::C),
            in_class(ctx, Formation::C), inst);
  }
}

// --- P-SUP ------------------------------------------------------------------------

void suite_p_sup(GroupAnalysis& ctx,
                 const std::vector<FactorizationPair>& pairs, Recorder& rec) {
  auto& lat = ctx.lattice();
  const int top = lat.top();
  const int n = ctx.group().order();
  auto primes = prime_divisors(n);
  bool concl_u = in_class(ctx, Formation::Supersolvable);
  bool derived_nilp = in_class(ctx, ctx.derived_index(), Formation::Nilpotent);
  auto normal_sylow_for = [&](int r) {
    for (int s : lat.sylow_in(top, r))
      if (lat.is_normal_in_group(s)) return true;
    return false;
  };
  // the residual identity is a per-group equation
  bool res_identity =
      residual_idx(ctx, Formation::Supersolvable) ==
      lat.meet(residual_idx(ctx, Formation::Metanilpotent), b_operator(ctx));
  bool a_residual_nilpotent = in_class(
      ctx, residual_idx(ctx, Formation::AbelianSylow), Formation::Nilpotent);

  for (const auto& p : pairs) {
    bool common = ctx.is_submodular(p.a, top) && ctx.is_submodular(p.b, top) &&
                  in_class(ctx, p.a, Formation::Supersolvable) &&
                  in_class(ctx, p.b, Formation::Supersolvable);
    auto inst = [&] {
      return "A=" + sub_desc(lat, p.a) + ", B=" + sub_desc(lat, p.b);
    };
    int r = prime_power_base(p.index_a);
    bool b_nilp = in_class(ctx, p.b, Formation::Nilpotent);
    bool b_normal = lat.is_normal_in_group(p.b);

    rec.add("P-SUP(1)", common && derived_nilp, concl_u, inst);
    rec.add("P-SUP(2)", common && r != 0 && normal_sylow_for(r), concl_u, inst);
    rec.add("P-SUP(3)", common && r != 0 && !primes.empty() && r == primes.back(),
            concl_u, inst);
    rec.add("P-SUP(4)", common && b_nilp && b_normal, concl_u, inst);
    rec.add("P-SUP(5)", common && b_nilp && is_prime(p.index_b), concl_u, inst);
    rec.add("P-SUP(6)",
            common && b_normal && is_siding(ctx.member_analysis(p.b)), concl_u,
            inst);
    rec.add("P-SUP(res)",
            common && (a_residual_nilpotent ||
                       std::gcd(p.index_a, p.index_b) == 1),
            res_identity, inst);
  }
}

// --- T1 / T2 / corollaries -----------------------------------------------------------

void suite_t1(GroupAnalysis& ctx, const std::vector<FactorizationPair>& pairs,
              Recorder& rec) {
  auto& lat = ctx.lattice();
  const int top = lat.top();
  const int n = ctx.group().order();
  int fit = ctx.fitting_index();
  bool concl = in_class(ctx, Formation::Z);
  for (const auto& p : pairs) {
    bool common = ctx.is_submodular(p.a, top) && ctx.is_submodular(p.b, top) &&
                  in_class(ctx, p.a, Formation::Z) &&
                  in_class(ctx, p.b, Formation::Z);
    auto inst = [&] {
      return "A=" + sub_desc(lat, p.a) + ", B=" + sub_desc(lat, p.b);
    };
    int iaf = n / lat.order_of(lat.join(p.a, fit));
    int ibf = n / lat.order_of(lat.join(p.b, fit));
    rec.add("T1(1)", common && std::gcd(iaf, ibf) == 1, concl, inst);
    int qa = lat.order_of(p.a) /
             lat.order_of(member_residual_idx(ctx, p.a, Formation::AbelianSylowSqf));
    int qb = lat.order_of(p.b) /
             lat.order_of(member_residual_idx(ctx, p.b, Formation::AbelianSylowSqf));
    rec.add("T1(2)", common && std::gcd(qa, qb) == 1, concl, inst);
  }
}

void suite_t2(GroupAnalysis& ctx, const std::vector<FactorizationPair>& pairs,
              Recorder& rec) {
  auto& lat = ctx.lattice();
  const int top = lat.top();
  const int n = ctx.group().order();
  int fit = ctx.fitting_index();
  bool in_c = in_class(ctx, Formation::C);
  bool in_z = in_class(ctx, Formation::Z);
  bool a_res_nilp = in_class(
      ctx, residual_idx(ctx, Formation::AbelianSylow), Formation::Nilpotent);
  for (const auto& p : pairs) {
    bool common = ctx.is_submodular(p.a, top) && ctx.is_submodular(p.b, top) &&
                  in_class(ctx, p.a, Formation::C) &&
                  in_class(ctx, p.b, Formation::C);
    auto inst = [&] {
      return "A=" + sub_desc(lat, p.a) + ", B=" + sub_desc(lat, p.b);
    };
    int iaf = n / lat.order_of(lat.join(p.a, fit));
    int ibf = n / lat.order_of(lat.join(p.b, fit));
    rec.add("T2(1)", common && std::gcd(iaf, ibf) == 1, in_c, inst);
    rec.add("T2(2)", common && a_res_nilp, in_z, inst);
  }
}

void suite_corollaries(GroupAnalysis& ctx,
                       const std::vector<FactorizationPair>& pairs,
                       Recorder& rec, const std::string& which) {
  auto& lat = ctx.lattice();
  const int top = lat.top();
  bool in_z = in_class(ctx, Formation::Z);
  bool in_u = in_class(ctx, Formation::Supersolvable);
  bool a1_res_nilp = in_class(
      ctx, residual_idx(ctx, Formation::AbelianSylowSqf), Formation::Nilpotent);
  for (const auto& p : pairs) {
    bool subm = ctx.is_submodular(p.a, top) && ctx.is_submodular(p.b, top);
    auto inst = [&] {
      return "A=" + sub_desc(lat, p.a) + ", B=" + sub_desc(lat, p.b);
    };
    if (which == "C-A1") {
      bool hyp = subm && in_class(ctx, p.a, Formation::Z) &&
                 in_class(ctx, p.b, Formation::Z) &&
                 std::gcd(p.index_a, p.index_b) == 1;
      rec.add("C-A1", hyp, in_z, inst);
    } else if (which == "C-B1") {
      bool hyp = subm && in_class(ctx, p.a, Formation::Z) &&
                 in_class(ctx, p.b, Formation::Z) && a1_res_nilp;
      rec.add("C-B1", hyp, in_z, inst);
    } else {
      bool hyp = subm && in_class(ctx, p.a, Formation::Nilpotent) &&
                 in_class(ctx, p.b, Formation::Nilpotent);
      rec.add("C-B2", hyp, in_z && in_u, inst);
    }
  }
}

bool family_needs_pairs(const std::string& f) {
  return f == "L-SOLV" || f == "L-TOWER" || f == "L-NN" || f == "P-SUP" ||
         f == "T1" || f == "T2" || f == "C-A1" || f == "C-B1" || f == "C-B2";
}

void run_family(const std::string& fam, GroupAnalysis& ctx,
                const std::vector<FactorizationPair>& pairs, Recorder& rec) {
  if (fam == "L-SUB")
    suite_l_sub(ctx, rec);
  else if (fam == "L-MAXMOD")
    suite_l_maxmod(ctx, rec);
  else if (fam == "L-PRIM")
    suite_l_prim(ctx, rec);
  else if (fam == "L-SOLV")
    suite_l_solv(ctx, pairs, rec);
  else if (fam == "L-PSN")
    suite_l_psn(ctx, rec);
  else if (fam == "L-ZC")
    suite_l_zc(ctx, rec);
  else if (fam == "L-RES")
    suite_l_res(ctx, rec);
  else if (fam == "L-TOWER")
    suite_l_tower(ctx, pairs, rec);
  else if (fam == "L-NN")
    suite_l_nn(ctx, pairs, rec);
  else if (fam == "P-SUP")
    suite_p_sup(ctx, pairs, rec);
  else if (fam == "T1")
    suite_t1(ctx, pairs, rec);
  else if (fam == "T2")
    suite_t2(ctx, pairs, rec);
  else if (fam == "C-A1" || fam == "C-B1" || fam == "C-B2")
    suite_corollaries(ctx, pairs, rec, fam);
  else
    throw Error("unknown suite family: " + fam);
}

ordered_json record_json(const CheckRecord& r) {
  ordered_json j;
  j["instance"] = r.instance;
  j["hypothesis"] = r.hypothesis_held;
  j["conclusion"] = r.conclusion_held;
  j["verdict"] = std::string(verdict_name(r.verdict));
  return j;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Vacuous:
      return "vacuous";
    case Verdict::Confirmed:
      return "confirmed";
    case Verdict::Counterexample:
      return "COUNTEREXAMPLE";
  }
  return "?";
}

std::vector<FactorizationPair> enumerate_factorizations(GroupAnalysis& ctx) {
  auto& lat = ctx.lattice();
  const int s = lat.size();
  const int n = ctx.group().order();
  std::vector<FactorizationPair> out;
  for (int a = 0; a < s; ++a) {
    long long oa = lat.order_of(a);
    for (int b = 0; b < s; ++b) {
      int m = lat.meet(a, b);
      if (oa * lat.order_of(b) ==
          static_cast<long long>(n) * lat.order_of(m))
        out.push_back(FactorizationPair{a, b, lat.order_of(a), lat.order_of(b),
                                        lat.order_of(m), n / lat.order_of(a),
                                        n / lat.order_of(b)});
    }
  }
  return out;
}

bool factorizes_by_product(const GroupTable& g, const ElemSet& a,
                           const ElemSet& b) {
  return set_product(g, a, b).count() == g.order();
}

const std::vector<std::string>& all_suite_families() {
  static const std::vector<std::string> fams = {
      "L-SUB", "L-MAXMOD", "L-PRIM", "L-SOLV", "L-PSN", "L-ZC", "L-RES",
      "L-TOWER", "L-NN", "P-SUP", "T1", "T2", "C-A1", "C-B1", "C-B2"};
  return fams;
}

std::vector<std::string> suite_parts(const std::string& family) {
  if (family == "L-SUB")
    return {"L-SUB(1)", "L-SUB(2)", "L-SUB(3)", "L-SUB(4)", "L-SUB(5)"};
  if (family == "L-MAXMOD") return {"L-MAXMOD"};
  if (family == "L-PRIM") return {"L-PRIM(structure)", "L-PRIM(reduction)"};
  if (family == "L-SOLV") return {"L-SOLV"};
  if (family == "L-PSN") return {"L-PSN"};
  if (family == "L-ZC")
    return {"L-ZC(inclusion)", "L-ZC(identity)", "L-ZC(subgroups)",
            "L-ZC(quotients)", "L-ZC(saturation)"};
  if (family == "L-RES") return {"L-RES(Ab)", "L-RES(N)", "L-RES(A1)"};
  if (family == "L-TOWER") return {"L-TOWER"};
  if (family == "L-NN") return {"L-NN(1)", "L-NN(2)"};
  if (family == "P-SUP")
    return {"P-SUP(1)", "P-SUP(2)", "P-SUP(3)", "P-SUP(4)",
            "P-SUP(5)", "P-SUP(6)", "P-SUP(res)"};
  if (family == "T1") return {"T1(1)", "T1(2)"};
  if (family == "T2") return {"T2(1)", "T2(2)"};
  if (family == "C-A1") return {"C-A1"};
  if (family == "C-B1") return {"C-B1"};
  if (family == "C-B2") return {"C-B2"};
  throw Error("unknown suite family: " + family);
}

long VerificationReport::total_counterexamples() const {
  long t = 0;
  for (const auto& g : groups)
    for (const auto& s : g.suites)
      t += static_cast<long>(s.counterexamples.size());
  return t;
}

long VerificationReport::total_errors() const {
  long t = 0;
  for (const auto& g : groups)
    if (!g.error.empty()) ++t;
  return t;
}

GroupVerification verify_group(const GroupTable& g, const RunOptions& opt) {
  GroupVerification gv;
  gv.label = g.label();
  gv.order = g.order();
  auto t0 = std::chrono::steady_clock::now();
  try {
    GroupAnalysis ctx(g, opt.budget);
    Recorder rec(gv.suites, opt.store_vacuous);
    const auto fams = opt.suites.empty() ? all_suite_families() : opt.suites;
    for (const auto& f : fams)
      for (const auto& p : suite_parts(f)) rec.part(p);
    std::vector<FactorizationPair> pairs;
    if (std::any_of(fams.begin(), fams.end(), family_needs_pairs))
      pairs = enumerate_factorizations(ctx);
    for (const auto& f : fams) run_family(f, ctx, pairs, rec);
  } catch (const Error& e) {
    gv.suites.clear();
    gv.error = e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  gv.ms = opt.timings
              ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                    .count()
              : 0;
  return gv;
}

VerificationReport run_catalog(const std::vector<CatalogEntry>& entries,
                               const RunOptions& opt) {
  for (const auto& f : opt.suites) suite_parts(f);  // validate names up front
  VerificationReport rep;
  rep.manifest_hash = manifest_hash(entries);
  rep.groups.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= entries.size()) break;
      GroupVerification gv;
      try {
        GroupTable g = build_group(entries[i].spec);
        g.set_label(entries[i].label);
        gv = verify_group(g, opt);
      } catch (const Error& e) {
        gv.label = entries[i].label;
        gv.error = e.what();
      }
      rep.groups[i] = std::move(gv);
    }
  };
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1 || entries.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> ts;
    for (int j = 0; j < jobs; ++j) ts.emplace_back(worker);
    for (auto& t : ts) t.join();
  }
  return rep;
}

std::string report_to_json(const VerificationReport& r) {
  ordered_json root;
  root["manifest_hash"] = r.manifest_hash;
  root["groups"] = ordered_json::array();
  for (const auto& g : r.groups) {
    ordered_json jg;
    jg["label"] = g.label;
    jg["order"] = g.order;
    if (!g.error.empty()) jg["error"] = g.error;
    jg["suites"] = ordered_json::array();
    for (const auto& s : g.suites) {
      ordered_json js;
      js["id"] = s.id;
      js["vacuous"] = s.vacuous;
      js["confirmed"] = s.confirmed;
      js["counterexamples"] = ordered_json::array();
      for (const auto& c : s.counterexamples)
        js["counterexamples"].push_back(record_json(c));
      if (!s.details.empty()) {
        js["records"] = ordered_json::array();
        for (const auto& c : s.details) js["records"].push_back(record_json(c));
      }
      jg["suites"].push_back(std::move(js));
    }
    jg["ms"] = g.ms;
    root["groups"].push_back(std::move(jg));
  }
  return root.dump(2) + "\n";
}

std::string report_to_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "suite,group,vacuous,confirmed,counterexamples\n";
  for (const auto& g : r.groups)
    for (const auto& s : g.suites)
      os << s.id << "," << g.label << "," << s.vacuous << "," << s.confirmed
         << "," << s.counterexamples.size() << "\n";
  return os.str();
}

std::string report_to_markdown(const VerificationReport& r) {
  std::ostringstream os;
  os << "# Verification report\n\n";
  os << "Manifest hash: `" << r.manifest_hash << "`\n\n";
  os << r.groups.size() << " groups, " << r.total_counterexamples()
     << " counterexamples, " << r.total_errors() << " errors.\n\n";
  std::map<std::string, SuiteResult> totals;
  std::vector<std::string> order;
  for (const auto& g : r.groups)
    for (const auto& s : g.suites) {
      auto it = totals.find(s.id);
      if (it == totals.end()) {
        order.push_back(s.id);
        it = totals.emplace(s.id, SuiteResult{s.id, 0, 0, {}, {}}).first;
      }
      it->second.vacuous += s.vacuous;
      it->second.confirmed += s.confirmed;
      it->second.counterexamples.insert(it->second.counterexamples.end(),
                                        s.counterexamples.begin(),
                                        s.counterexamples.end());
    }
  os << "| suite | vacuous | confirmed | counterexamples |\n";
  os << "|---|---:|---:|---:|\n";
  for (const auto& id : order) {
    const auto& t = totals.at(id);
    os << "| " << id << " | " << t.vacuous << " | " << t.confirmed << " | "
       << t.counterexamples.size() << " |\n";
  }
  bool any_cx = r.total_counterexamples() > 0;
  if (any_cx) {
    os << "\n## Counterexamples\n\n";
    for (const auto& g : r.groups)
      for (const auto& s : g.suites)
        for (const auto& c : s.counterexamples)
          os << "- " << g.label << " / " << s.id << " / " << c.instance
             << "\n";
  }
  if (r.total_errors() > 0) {
    os << "\n## Errors\n\n";
    for (const auto& g : r.groups)
      if (!g.error.empty()) os << "- " << g.label << ": " << g.error << "\n";
  }
  return os.str();
}

}  // namespace submod
