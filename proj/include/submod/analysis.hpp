#pragma once
// Per-group computation context: owns a group table and a lazily built
// subgroup lattice, and memoizes everything that is expensive to recompute
// (modularity verdicts, chain certificates, extracted subgroup contexts,
// quotient contexts, class membership, residuals).
//
// All subgroups are named by their index in this group's lattice.  Results
// about a subgroup-of-a-subgroup are still expressed with indices of the
// enclosing group's lattice, since that lattice is complete.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "submod/group.hpp"
#include "submod/lattice.hpp"

namespace submod {

// Ascending chain of lattice indices, chain.front() = bottom subgroup,
// chain.back() = top subgroup of the chain.
struct ChainCertificate {
  enum class Kind { Submodular, PSubnormal };
  Kind kind;
  std::vector<int> chain;
};

// Structural classification of a maximal modular subgroup M of G:
//   NormalSimpleQuotient  - M is normal in G and G/M is simple
//   PQNonabelianQuotient  - G/core(M) is non-abelian of order p*q
enum class MaxModBranch { NormalSimpleQuotient, PQNonabelianQuotient };

class GroupAnalysis {
 public:
  explicit GroupAnalysis(GroupTable g,
                         std::size_t budget = SubgroupLattice::kDefaultBudget);
  GroupAnalysis(const GroupAnalysis&) = delete;
  GroupAnalysis& operator=(const GroupAnalysis&) = delete;

  const GroupTable& group() const { return g_; }
  std::size_t budget() const { return budget_; }
  SubgroupLattice& lattice();
  int top() { return lattice().top(); }
  int bottom() { return lattice().bottom(); }

  // --- modularity -------------------------------------------------------
  // H is a modular element of the subgroup lattice of K.  Requires H <= K.
  bool is_modular_in(int h, int k);
  // Maximal elements of the set of proper modular subgroups of K, sorted.
  const std::vector<int>& maximal_modular_subgroups(int k);
  // Structure of a maximal modular subgroup m of the whole group; throws
  // LemmaViolated if neither branch applies.
  MaxModBranch check_maximal_modular_structure(int m);

  // --- chains -----------------------------------------------------------
  // Least (length, then index sequence) chain H = H0 <= ... <= Hr = K with
  // each step modular-in-its-successor, descending through maximal modular
  // subgroups.  nullopt if none exists.
  const std::optional<ChainCertificate>& submodular_chain(int h, int k);
  bool is_submodular(int h, int k);
  bool is_submodular_in_group(int h) { return is_submodular(h, top()); }

  // Least chain H = H0 < ... < Hr = K with every index |H_{i+1} : H_i| prime.
  const std::optional<ChainCertificate>& p_subnormal_chain(int h, int k);
  bool is_p_subnormal(int h, int k);
  bool is_p_subnormal_in_group(int h) { return is_p_subnormal(h, top()); }

  bool is_subnormal(int h, int k);
  // Re-walks a certificate and checks every step; used to cross-check
  // memoized search results.
  bool certificate_valid(const ChainCertificate& cert);

  // --- structure --------------------------------------------------------
  bool is_simple();
  bool solvable();
  // Orders of the chief factors of a solvable group, from the bottom of the
  // series upward; throws NotSolvable otherwise.
  std::vector<int> chief_factor_orders();
  int derived_index();               // lattice index of the derived subgroup
  int derived_index_of(int k);       // derived subgroup of member k
  int fitting_index();
  int frattini_index();
  int center_index();

  // --- derived contexts ---------------------------------------------------
  // Context for subgroup #idx as a group in its own right (idx == top()
  // returns *this).  to_parent maps its element ids back into this group.
  GroupAnalysis& member_analysis(int idx);
  const std::vector<int>& member_to_parent(int idx);
  // Lattice index in *this* group of subgroup #sub of member #idx's context.
  int lift_member_subgroup(int idx, int sub);

  // Context for the quotient by normal subgroup #nidx; proj maps element ids
  // of this group onto quotient element ids.
  GroupAnalysis& quotient_analysis(int nidx);
  const std::vector<int>& quotient_proj(int nidx);
  // Quotient-lattice index of the image HN/N of subgroup #hidx.
  int image_in_quotient(int nidx, int hidx);
  // This-lattice index of the full preimage of quotient subgroup #qidx.
  int preimage_from_quotient(int nidx, int qidx);

  // Scratch caches used by the formation layer; keys are
  // (lattice index, formation id).
  std::map<std::pair<int, int>, bool> class_cache;
  std::map<std::pair<int, int>, int> residual_cache;

 private:
  struct MemberCtx {
    std::unique_ptr<GroupAnalysis> ctx;
    std::vector<int> to_parent;
  };
  struct QuotientCtx {
    std::unique_ptr<GroupAnalysis> ctx;
    std::vector<int> proj;
  };

  static std::uint64_t pair_key(int h, int k) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(h)) << 32) |
           static_cast<std::uint32_t>(k);
  }
  const std::optional<ChainCertificate>& chain_search(
      int h, int k, ChainCertificate::Kind kind);
  std::vector<int> chain_step_candidates(int h, int k,
                                         ChainCertificate::Kind kind);
  void ensure_member_ctx(int idx);
  void ensure_quotient_ctx(int nidx);

  GroupTable g_;
  std::size_t budget_;
  std::unique_ptr<SubgroupLattice> lat_;

  std::unordered_map<std::uint64_t, bool> modular_memo_;
  std::vector<std::optional<std::vector<int>>> maxmod_memo_;
  std::unordered_map<std::uint64_t, std::optional<ChainCertificate>>
      submod_memo_;
  std::unordered_map<std::uint64_t, std::optional<ChainCertificate>>
      psn_memo_;

  std::map<int, MemberCtx> members_;
  std::map<int, QuotientCtx> quotients_;
  std::map<int, int> derived_memo_;
  std::optional<bool> solvable_;
  std::optional<int> fitting_;
  std::optional<int> frattini_;
  std::optional<int> center_;
};

}  // namespace submod
