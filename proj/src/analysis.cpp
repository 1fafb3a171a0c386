#include "submod/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "submod/numtheory.hpp"

namespace submod {

GroupAnalysis::GroupAnalysis(GroupTable g, std::size_t budget)
    : g_(std::move(g)), budget_(budget) {}

SubgroupLattice& GroupAnalysis::lattice() {
  if (!lat_)
    lat_ = std::make_unique<SubgroupLattice>(SubgroupLattice::enumerate(g_, budget_));
  return *lat_;
}

// --- modularity -----------------------------------------------------------

bool GroupAnalysis::is_modular_in(int h, int k) {
  auto& lat = lattice();
  if (!lat.leq(h, k))
    throw NotContained("is_modular_in: subgroup " + std::to_string(h) +
                       " is not contained in subgroup " + std::to_string(k) +
                       " of " + g_.label());
  auto key = pair_key(h, k);
  if (auto it = modular_memo_.find(key); it != modular_memo_.end())
    return it->second;

  const auto& bk = lat.below(k);
  bool ok = [&] {
    // (X v H) ^ Z == X v (H ^ Z)  for all X <= Z <= K
    for (int z : bk) {
      int hz = lat.meet(h, z);
      for (int x : lat.below(z))
        if (lat.meet(lat.join(x, h), z) != lat.join(x, hz)) return false;
    }
    // (H v Y) ^ Z == H v (Y ^ Z)  for all Y <= K and H <= Z <= K
    for (int z : bk) {
      if (!lat.leq(h, z)) continue;
      for (int y : bk)
        if (lat.meet(lat.join(h, y), z) != lat.join(h, lat.meet(y, z)))
          return false;
    }
    return true;
  }();
  modular_memo_.emplace(key, ok);
  return ok;
}

const std::vector<int>& GroupAnalysis::maximal_modular_subgroups(int k) {
  auto& lat = lattice();
  if (maxmod_memo_.empty()) maxmod_memo_.resize(lat.size());
  auto& slot = maxmod_memo_[k];
  if (slot) return *slot;

  std::vector<int> mods;
  for (int h : lat.below(k))
    if (h != k && is_modular_in(h, k)) mods.push_back(h);
  std::vector<int> maximal;
  for (int h : mods) {
    bool topmost = true;
    for (int other : mods)
      if (other != h && lat.leq(h, other)) {
        topmost = false;
        break;
      }
    if (topmost) maximal.push_back(h);
  }
  slot = std::move(maximal);
  return *slot;
}

MaxModBranch GroupAnalysis::check_maximal_modular_structure(int m) {
  auto& lat = lattice();
  const auto& mm = maximal_modular_subgroups(top());
  if (std::find(mm.begin(), mm.end(), m) == mm.end())
    throw Error("check_maximal_modular_structure: subgroup of order " +
                std::to_string(lat.order_of(m)) +
                " is not a maximal modular subgroup of " + g_.label());
  if (lat.is_normal_in_group(m) && quotient_analysis(m).is_simple())
    return MaxModBranch::NormalSimpleQuotient;
  int c = lat.core_index(m);
  int qorder = g_.order() / lat.order_of(c);
  if (is_semiprime(qorder) && !quotient_analysis(c).group().abelian())
    return MaxModBranch::PQNonabelianQuotient;
  throw LemmaViolated(
      "maximal modular subgroup of " + g_.label() + " (order " +
      std::to_string(lat.order_of(m)) +
      "): neither normal with simple quotient nor non-abelian semiprime "
      "quotient by its core");
}

// --- chains ----------------------------------------------------------------

std::vector<int> GroupAnalysis::chain_step_candidates(int h, int k,
                                                      ChainCertificate::Kind kind) {
  auto& lat = lattice();
  std::vector<int> out;
  if (kind == ChainCertificate::Kind::Submodular) {
    for (int m : maximal_modular_subgroups(k))
      if (lat.leq(h, m)) out.push_back(m);
  } else {
    int ko = lat.order_of(k);
    for (int m : lat.below(k))
      if (m != k && lat.leq(h, m) && is_prime(ko / lat.order_of(m)))
        out.push_back(m);
  }
  return out;
}

const std::optional<ChainCertificate>& GroupAnalysis::chain_search(
    int h, int k, ChainCertificate::Kind kind) {
  auto& lat = lattice();
  if (!lat.leq(h, k))
    throw NotContained("chain search: subgroup " + std::to_string(h) +
                       " is not contained in subgroup " + std::to_string(k) +
                       " of " + g_.label());
  auto& memo =
      kind == ChainCertificate::Kind::Submodular ? submod_memo_ : psn_memo_;
  auto key = pair_key(h, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  std::optional<ChainCertificate> best;
  if (h == k) {
    best = ChainCertificate{kind, {k}};
  } else {
    for (int m : chain_step_candidates(h, k, kind)) {
      const auto& sub = chain_search(h, m, kind);
      if (!sub) continue;
      std::vector<int> cand = sub->chain;
      cand.push_back(k);
      if (!best || cand.size() < best->chain.size() ||
          (cand.size() == best->chain.size() && cand < best->chain))
        best = ChainCertificate{kind, std::move(cand)};
    }
  }
  auto [it, inserted] = memo.emplace(key, std::move(best));
  (void)inserted;
  return it->second;
}

const std::optional<ChainCertificate>& GroupAnalysis::submodular_chain(int h, int k) {
  return chain_search(h, k, ChainCertificate::Kind::Submodular);
}
bool GroupAnalysis::is_submodular(int h, int k) {
  return submodular_chain(h, k).has_value();
}
const std::optional<ChainCertificate>& GroupAnalysis::p_subnormal_chain(int h, int k) {
  return chain_search(h, k, ChainCertificate::Kind::PSubnormal);
}
bool GroupAnalysis::is_p_subnormal(int h, int k) {
  return p_subnormal_chain(h, k).has_value();
}

bool GroupAnalysis::is_subnormal(int h, int k) {
  auto& lat = lattice();
  if (!lat.leq(h, k))
    throw NotContained("is_subnormal: subgroup " + std::to_string(h) +
                       " is not contained in subgroup " + std::to_string(k) +
                       " of " + g_.label());
  return submod::is_subnormal(g_, lat.members(h), lat.members(k));
}

bool GroupAnalysis::certificate_valid(const ChainCertificate& cert) {
  auto& lat = lattice();
  const auto& c = cert.chain;
  if (c.empty()) return false;
  for (int idx : c)
    if (idx < 0 || idx >= lat.size()) return false;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    int a = c[i], b = c[i + 1];
    if (a == b || !lat.leq(a, b)) return false;
    if (cert.kind == ChainCertificate::Kind::Submodular) {
      if (!is_modular_in(a, b)) return false;
    } else {
      if (!is_prime(lat.order_of(b) / lat.order_of(a))) return false;
    }
  }
  return true;
}

// --- structure ---------------------------------------------------------------

bool GroupAnalysis::is_simple() {
  return g_.order() > 1 &&
         static_cast<int>(lattice().normal_indices().size()) == 2;
}

bool GroupAnalysis::solvable() {
  if (!solvable_) {
    ElemSet all(g_.order());
    for (int i = 0; i < g_.order(); ++i) all.set(i);
    solvable_ = is_solvable_subset(g_, all);
  }
  return *solvable_;
}

std::vector<int> GroupAnalysis::chief_factor_orders() {
  if (!solvable())
    throw NotSolvable("chief series requested for non-solvable group " +
                      g_.label());
  if (g_.order() == 1) return {};
  int n = lattice().minimal_normals().front();
  std::vector<int> out{lattice().order_of(n)};
  auto rest = quotient_analysis(n).chief_factor_orders();
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

int GroupAnalysis::derived_index() { return derived_index_of(top()); }

int GroupAnalysis::derived_index_of(int k) {
  if (auto it = derived_memo_.find(k); it != derived_memo_.end())
    return it->second;
  int idx = lattice().index_of(derived_of(g_, lattice().members(k)));
  derived_memo_.emplace(k, idx);
  return idx;
}

int GroupAnalysis::fitting_index() {
  if (!fitting_) fitting_ = lattice().fitting();
  return *fitting_;
}
int GroupAnalysis::frattini_index() {
  if (!frattini_) frattini_ = lattice().frattini();
  return *frattini_;
}
int GroupAnalysis::center_index() {
  if (!center_) center_ = lattice().index_of(center(g_));
  return *center_;
}

// --- derived contexts --------------------------------------------------------

void GroupAnalysis::ensure_member_ctx(int idx) {
  if (members_.count(idx)) return;
  auto& lat = lattice();
  MemberCtx mc;
  if (idx == lat.top()) {
    mc.to_parent.resize(g_.order());
    std::iota(mc.to_parent.begin(), mc.to_parent.end(), 0);
  } else {
    auto et = extract_subgroup(g_, lat.members(idx));
    mc.ctx = std::make_unique<GroupAnalysis>(std::move(et.table), budget_);
    mc.to_parent = std::move(et.to_parent);
  }
  members_.emplace(idx, std::move(mc));
}

GroupAnalysis& GroupAnalysis::member_analysis(int idx) {
  ensure_member_ctx(idx);
  auto& mc = members_.at(idx);
  return mc.ctx ? *mc.ctx : *this;
}

const std::vector<int>& GroupAnalysis::member_to_parent(int idx) {
  ensure_member_ctx(idx);
  return members_.at(idx).to_parent;
}

int GroupAnalysis::lift_member_subgroup(int idx, int sub) {
  auto& ma = member_analysis(idx);
  const auto& map = member_to_parent(idx);
  ElemSet bits(g_.order());
  ma.lattice().members(sub).for_each([&](int e) { bits.set(map[e]); });
  return lattice().index_of(bits);
}

void GroupAnalysis::ensure_quotient_ctx(int nidx) {
  if (quotients_.count(nidx)) return;
  QuotientCtx qc;
  if (nidx == lattice().bottom()) {
    // The quotient by the trivial subgroup is the group itself (the cosets
    // are discovered in element order), so reuse this analysis as-is.
    qc.proj.resize(g_.order());
    std::iota(qc.proj.begin(), qc.proj.end(), 0);
  } else {
    auto qt = quotient(g_, lattice().members(nidx));
    qc.ctx = std::make_unique<GroupAnalysis>(std::move(qt.table), budget_);
    qc.proj = std::move(qt.proj);
  }
  quotients_.emplace(nidx, std::move(qc));
}

GroupAnalysis& GroupAnalysis::quotient_analysis(int nidx) {
  ensure_quotient_ctx(nidx);
  auto& qc = quotients_.at(nidx);
  return qc.ctx ? *qc.ctx : *this;
}

const std::vector<int>& GroupAnalysis::quotient_proj(int nidx) {
  ensure_quotient_ctx(nidx);
  return quotients_.at(nidx).proj;
}

int GroupAnalysis::image_in_quotient(int nidx, int hidx) {
  auto& qa = quotient_analysis(nidx);
  const auto& proj = quotients_.at(nidx).proj;
  ElemSet bits(qa.group().order());
  lattice().members(hidx).for_each([&](int e) { bits.set(proj[e]); });
  return qa.lattice().index_of(bits);
}

int GroupAnalysis::preimage_from_quotient(int nidx, int qidx) {
  auto& qa = quotient_analysis(nidx);
  const auto& proj = quotients_.at(nidx).proj;
  const ElemSet& qm = qa.lattice().members(qidx);
  ElemSet bits(g_.order());
  for (int e = 0; e < g_.order(); ++e)
    if (qm.test(proj[e])) bits.set(e);
  return lattice().index_of(bits);
}

}  // namespace submod
