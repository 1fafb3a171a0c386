// Complete subgroup lattice of a validated GroupTable.
//
// Enumeration seeds with the cyclic subgroups and closes under pairwise
// join; since every subgroup is the join of the cyclic subgroups of its
// elements, the fixpoint is the full lattice. Subgroups are interned and
// canonically ordered by (order, lexicographic member set), so indices are
// reproducible across runs.
#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "submod/group.hpp"

namespace submod {

class SubgroupLattice {
public:
  static constexpr std::size_t kDefaultBudget = 20000;

  // throws BudgetExceeded if more than `budget` subgroups are discovered
  static SubgroupLattice enumerate(const GroupTable& g, std::size_t budget = kDefaultBudget);

  const GroupTable& group() const { return *g_; }
  int size() const { return static_cast<int>(members_.size()); }
  const ElemSet& members(int i) const { return members_[i]; }
  int order_of(int i) const { return orders_[i]; }
  const std::vector<int>& gens_of(int i) const { return gens_[i]; }
  int top() const { return size() - 1; }
  int bottom() const { return 0; }

  // index of an interned member set, -1 if the set is not a subgroup here
  int index_of(const ElemSet& s) const;

  bool leq(int a, int b) const { return below_bits_[b].test(a); }
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * members_.size() + b]; }
  int join(int a, int b) const { return join_[static_cast<std::size_t>(a) * members_.size() + b]; }

  // indices of all subgroups contained in k, ascending
  const std::vector<int>& below(int k) const { return below_[k]; }
  // maximal subgroups of k / minimal oversubgroups of k
  const std::vector<int>& lower_covers(int k) const { return lower_covers_[k]; }
  const std::vector<int>& upper_covers(int k) const { return upper_covers_[k]; }

  // normality within the full group
  bool is_normal_in_group(int i) const { return normal_[i] != 0; }
  const std::vector<int>& normal_indices() const { return normal_list_; }
  // h normal inside k; checked with k's generators
  bool normal_in(int h, int k) const;

  bool is_cyclic(int i) const { return cyclic_[i] != 0; }

  // all subgroups of the interval [h, k]; throws NotComparable if h </= k
  std::vector<int> interval(int h, int k) const;
  // maximal subgroups of k (= lower covers); documented alias
  const std::vector<int>& maximal_subgroups(int k) const { return lower_covers_[k]; }

  // intersection of the maximal subgroups of the whole group
  int frattini() const;
  // join of all normal nilpotent subgroups; throws FittingNotNilpotent if
  // the accumulated join fails the (unique-normal-Sylow) nilpotency check
  int fitting() const;
  // least-index maximal subgroup with trivial core, if any
  std::optional<int> primitive_witness() const;
  std::vector<int> minimal_normals() const;

  // lattice index of the core of h in the whole group
  int core_index(int h) const;
  // Sylow p-subgroups of k: all subgroups of k of order p_part(|k|, p)
  std::vector<int> sylow_in(int k, int p) const;
  // subgroups of the whole group whose order is the full {p1..pr}-part;
  // may be empty (Hall subgroups need not exist)
  std::vector<int> hall_subgroups(const std::vector<int>& primes) const;
  // nilpotency of member subgroup i: every Sylow of i is normal in i
  bool nilpotent_member(int i) const;

private:
  const GroupTable* g_ = nullptr;
  std::vector<ElemSet> members_;
  std::vector<int> orders_;
  std::vector<std::vector<int>> gens_;
  std::unordered_map<ElemSet, int, ElemSetHash> index_;
  std::vector<ElemSet> below_bits_;  // bitset over subgroup indices
  std::vector<std::vector<int>> below_;
  std::vector<std::vector<int>> lower_covers_;
  std::vector<std::vector<int>> upper_covers_;
  std::vector<int> meet_, join_;
  std::vector<char> normal_, cyclic_;
  std::vector<int> normal_list_;
};

}  // namespace submod
