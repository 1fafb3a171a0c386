#include "oracles.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "submod/numtheory.hpp"

namespace submod::oracle {

ElemSet close(const GroupTable& g, ElemSet seed) {
  seed.set(g.identity());
  std::vector<int> elems;
  seed.for_each([&](int e) { elems.push_back(e); });
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      int p = g.mul(elems[i], elems[j]);
      if (!seed.test(p)) {
        seed.set(p);
        elems.push_back(p);
      }
    }
  return seed;
}

std::vector<ElemSet> enumerate_subgroups(const GroupTable& g) {
  std::unordered_set<ElemSet, ElemSetHash> seen;
  std::queue<ElemSet> work;
  ElemSet triv(g.order());
  triv.set(g.identity());
  seen.insert(triv);
  work.push(triv);
  while (!work.empty()) {
    ElemSet s = work.front();
    work.pop();
    for (int e = 0; e < g.order(); ++e) {
      if (s.test(e)) continue;
      ElemSet ext = s;
      ext.set(e);
      ElemSet c = close(g, ext);
      if (seen.insert(c).second) work.push(c);
    }
  }
  std::vector<ElemSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

bool closed_under_mul(const GroupTable& g, const ElemSet& s,
                      const std::vector<int>& elems) {
  for (int a : elems)
    for (int b : elems)
      if (!s.test(g.mul(a, b))) return false;
  return true;
}

// next size-k index combination in lexicographic order; false when done
bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<ElemSet> all_closed_subsets(const GroupTable& g) {
  const int n = g.order();
  std::vector<int> rest;
  for (int e = 0; e < n; ++e)
    if (e != g.identity()) rest.push_back(e);
  std::vector<ElemSet> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int k = d - 1;  // elements besides the identity
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    bool more = k <= static_cast<int>(rest.size());
    while (more) {
      ElemSet s(n);
      s.set(g.identity());
      std::vector<int> elems{g.identity()};
      for (int i : idx) {
        s.set(rest[i]);
        elems.push_back(rest[i]);
      }
      if (closed_under_mul(g, s, elems)) out.push_back(s);
      more = k > 0 && next_combination(idx, static_cast<int>(rest.size()));
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool modular_in(const GroupTable& g, const std::vector<ElemSet>& subs,
                const ElemSet& h, const ElemSet& k) {
  auto join = [&](const ElemSet& a, const ElemSet& b) {
    return close(g, a | b);
  };
  // law (i): X <= Z <= K implies <X,H> meet Z = <X, H meet Z>
  for (const auto& z : subs) {
    if (!k.contains(z)) continue;
    for (const auto& x : subs) {
      if (!z.contains(x)) continue;
      if ((join(x, h) & z) != join(x, h & z)) return false;
    }
  }
  // law (ii): H <= Z <= K, Y <= K implies <H,Y> meet Z = <H, Y meet Z>
  for (const auto& z : subs) {
    if (!k.contains(z) || !z.contains(h)) continue;
    for (const auto& y : subs) {
      if (!k.contains(y)) continue;
      if ((join(h, y) & z) != join(h, y & z)) return false;
    }
  }
  return true;
}

namespace {

template <class Step>
bool chain_reaches(const std::vector<ElemSet>& subs, const ElemSet& h,
                   const ElemSet& k, Step&& step_ok) {
  if (h == k) return true;
  std::unordered_set<ElemSet, ElemSetHash> failed;
  // depth-first over strictly increasing chains; a subgroup that failed to
  // reach k once can never reach it, which keeps the search polynomial
  auto dfs = [&](auto&& self, const ElemSet& cur) -> bool {
    if (cur == k) return true;
    if (failed.count(cur)) return false;
    for (const auto& m : subs) {
      if (!k.contains(m) || !m.contains(cur) || m == cur) continue;
      if (step_ok(cur, m) && self(self, m)) return true;
    }
    failed.insert(cur);
    return false;
  };
  return dfs(dfs, h);
}

}  // namespace

bool submodular(const GroupTable& g, const std::vector<ElemSet>& subs,
                const ElemSet& h, const ElemSet& k) {
  return chain_reaches(subs, h, k, [&](const ElemSet& a, const ElemSet& b) {
    return modular_in(g, subs, a, b);
  });
}

bool p_subnormal(const GroupTable&, const std::vector<ElemSet>& subs,
                 const ElemSet& h, const ElemSet& k) {
  return chain_reaches(subs, h, k, [&](const ElemSet& a, const ElemSet& b) {
    return b.count() % a.count() == 0 && is_prime(b.count() / a.count());
  });
}

ElemSet set_product(const GroupTable& g, const ElemSet& a, const ElemSet& b) {
  ElemSet out(g.order());
  a.for_each([&](int x) { b.for_each([&](int y) { out.set(g.mul(x, y)); }); });
  return out;
}

ElemSet commutator_subgroup(const GroupTable& g, const ElemSet& a,
                            const ElemSet& b) {
  ElemSet seed(g.order());
  seed.set(g.identity());
  a.for_each([&](int x) {
    b.for_each([&](int y) { seed.set(g.comm(x, y)); });
  });
  return close(g, seed);
}

bool nilpotent_lcs(const GroupTable& g, const ElemSet& h) {
  ElemSet cur = h;
  for (;;) {
    ElemSet next = commutator_subgroup(g, cur, h);
    if (next.count() == 1) return true;
    if (next == cur) return false;
    cur = next;
  }
}

bool solvable_derived_series(const GroupTable& g, const ElemSet& h) {
  ElemSet cur = h;
  for (;;) {
    ElemSet next = commutator_subgroup(g, cur, cur);
    if (next.count() == 1) return true;
    if (next == cur) return false;
    cur = next;
  }
}

bool supersolvable_prime_index(const GroupTable& g,
                               const std::vector<ElemSet>& subs) {
  ElemSet whole(g.order());
  for (int e = 0; e < g.order(); ++e) whole.set(e);
  for (const auto& m : subs) {
    if (m == whole) continue;
    bool maximal = true;  // nothing strictly between m and the whole group
    for (const auto& t : subs) {
      if (t == m || t == whole) continue;
      if (t.contains(m)) {
        maximal = false;
        break;
      }
    }
    if (maximal && !is_prime(g.order() / m.count())) return false;
  }
  return true;
}

}  // namespace submod::oracle
