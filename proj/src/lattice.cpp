#include "submod/lattice.hpp"

#include <algorithm>

#include "submod/numtheory.hpp"

namespace submod {

SubgroupLattice SubgroupLattice::enumerate(const GroupTable& g, std::size_t budget) {
  SubgroupLattice L;
  L.g_ = &g;
  const int n = g.order();

  std::vector<ElemSet> subs;
  std::unordered_map<ElemSet, int, ElemSetHash> seen;
  auto intern = [&](const ElemSet& s) {
    auto it = seen.find(s);
    if (it != seen.end()) return false;
    if (subs.size() >= budget)
      throw BudgetExceeded(budget, "subgroup enumeration of " + g.label() + " exceeds " +
                                       std::to_string(budget) + " subgroups");
    seen.emplace(s, static_cast<int>(subs.size()));
    subs.push_back(s);
    return true;
  };

  // cyclic seeds (includes the trivial subgroup via the identity)
  for (int x = 0; x < n; ++x) {
    int gen[1] = {x};
    intern(generated_subgroup(g, std::span<const int>(gen, 1)));
  }
  // close under pairwise join; new subgroups join the worklist
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (subs[i].contains(subs[j]) || subs[j].contains(subs[i])) continue;
      intern(generated_subgroup(g, subs[i] | subs[j]));
    }

  std::sort(subs.begin(), subs.end(), canonical_less);
  const int s = static_cast<int>(subs.size());
  L.members_ = std::move(subs);
  L.orders_.resize(s);
  L.gens_.resize(s);
  for (int i = 0; i < s; ++i) {
    L.orders_[i] = L.members_[i].count();
    L.gens_[i] = small_generating_set(g, L.members_[i]);
    L.index_.emplace(L.members_[i], i);
  }

  // containment bits and sorted below-lists (members are order-sorted, so
  // contained subgroups always have smaller or equal index)
  L.below_bits_.assign(s, ElemSet(s));
  L.below_.resize(s);
  for (int k = 0; k < s; ++k) {
    for (int x = 0; x <= k; ++x)
      if (L.members_[k].contains(L.members_[x])) {
        L.below_bits_[k].set(x);
        L.below_[k].push_back(x);
      }
  }

  // covers: x is a lower cover of k iff x < k with nothing strictly between
  L.lower_covers_.resize(s);
  L.upper_covers_.resize(s);
  for (int k = 0; k < s; ++k) {
    const auto& bel = L.below_[k];
    for (auto it = bel.rbegin(); it != bel.rend(); ++it) {
      int x = *it;
      if (x == k) continue;
      bool covered = false;
      for (int z : L.lower_covers_[k])
        if (L.below_bits_[z].test(x)) {
          covered = true;
          break;
        }
      if (!covered) L.lower_covers_[k].push_back(x);
    }
    std::sort(L.lower_covers_[k].begin(), L.lower_covers_[k].end());
    for (int x : L.lower_covers_[k]) L.upper_covers_[x].push_back(k);
  }

  // meet = set intersection (always interned); join via generation
  L.meet_.resize(static_cast<std::size_t>(s) * s);
  L.join_.resize(static_cast<std::size_t>(s) * s);
  for (int a = 0; a < s; ++a)
    for (int b = 0; b <= a; ++b) {
      int m;
      if (L.below_bits_[a].test(b)) m = b;
      else if (L.below_bits_[b].test(a)) m = a;
      else m = L.index_of(L.members_[a] & L.members_[b]);
      L.meet_[static_cast<std::size_t>(a) * s + b] = m;
      L.meet_[static_cast<std::size_t>(b) * s + a] = m;
      int j;
      if (L.below_bits_[a].test(b)) j = a;
      else if (L.below_bits_[b].test(a)) j = b;
      else {
        std::vector<int> gens = L.gens_[a];
        gens.insert(gens.end(), L.gens_[b].begin(), L.gens_[b].end());
        j = L.index_of(generated_subgroup(g, gens));
      }
      L.join_[static_cast<std::size_t>(a) * s + b] = j;
      L.join_[static_cast<std::size_t>(b) * s + a] = j;
    }

  L.normal_.resize(s);
  L.cyclic_.resize(s);
  for (int i = 0; i < s; ++i) {
    L.normal_[i] = is_normal(g, L.members_[i]) ? 1 : 0;
    if (L.normal_[i]) L.normal_list_.push_back(i);
    bool cyc = false;
    for (int x = L.members_[i].first(); x >= 0; x = L.members_[i].next(x))
      if (g.element_order(x) == L.orders_[i]) {
        cyc = true;
        break;
      }
    L.cyclic_[i] = cyc ? 1 : 0;
  }
  return L;
}

int SubgroupLattice::index_of(const ElemSet& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

bool SubgroupLattice::normal_in(int h, int k) const {
  if (!leq(h, k)) return false;
  const auto& H = members_[h];
  for (int t : gens_[k])
    for (int x = H.first(); x >= 0; x = H.next(x))
      if (!H.test(g_->conj(t, x))) return false;
  return true;
}

std::vector<int> SubgroupLattice::interval(int h, int k) const {
  if (!leq(h, k))
    throw NotComparable("interval endpoints are not nested subgroups");
  std::vector<int> out;
  for (int x : below_[k])
    if (leq(h, x)) out.push_back(x);
  return out;
}

int SubgroupLattice::frattini() const {
  int acc = top();
  for (int m : lower_covers_[top()]) acc = meet(acc, m);
  return acc;
}

bool SubgroupLattice::nilpotent_member(int i) const {
  for (int p : prime_divisors(orders_[i])) {
    for (int x : sylow_in(i, p))
      if (!normal_in(x, i)) return false;
  }
  return true;
}

int SubgroupLattice::fitting() const {
  int acc = bottom();
  for (int i : normal_list_)
    if (nilpotent_member(i)) acc = join(acc, i);
  if (!nilpotent_member(acc))
    throw FittingNotNilpotent("join of normal nilpotent subgroups of " + g_->label() +
                              " is not nilpotent");
  return acc;
}

std::optional<int> SubgroupLattice::primitive_witness() const {
  for (int m : lower_covers_[top()])
    if (core_index(m) == bottom()) return m;
  return std::nullopt;
}

std::vector<int> SubgroupLattice::minimal_normals() const {
  std::vector<int> out;
  for (int i : normal_list_) {
    if (i == bottom()) continue;
    bool minimal = true;
    for (int j : normal_list_) {
      if (j == bottom() || j == i) continue;
      if (below_bits_[i].test(j)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

int SubgroupLattice::core_index(int h) const {
  int idx = index_of(core(*g_, members_[h]));
  return idx;  // core of an interned subgroup is itself a subgroup
}

std::vector<int> SubgroupLattice::sylow_in(int k, int p) const {
  const int want = p_part(orders_[k], p);
  std::vector<int> out;
  for (int x : below_[k])
    if (orders_[x] == want) out.push_back(x);
  return out;
}

std::vector<int> SubgroupLattice::hall_subgroups(const std::vector<int>& primes) const {
  std::vector<int> ps(primes);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  int want = 1;
  for (int p : ps) want *= p_part(orders_[top()], p);
  std::vector<int> out;
  for (int x = 0; x < size(); ++x)
    if (orders_[x] == want) out.push_back(x);
  return out;
}

}  // namespace submod
