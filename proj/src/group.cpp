#include "submod/group.hpp"

#include <algorithm>
#include <numeric>

#include "submod/numtheory.hpp"

namespace submod {

GroupTable GroupTable::from_table(const std::vector<std::vector<int>>& rows, std::string label) {
  GroupTable g;
  g.n_ = static_cast<int>(rows.size());
  g.label_ = std::move(label);
  if (g.n_ == 0) throw NotClosed(0, 0, "empty multiplication table");
  g.mult_.resize(static_cast<std::size_t>(g.n_) * g.n_);
  for (int a = 0; a < g.n_; ++a) {
    if (static_cast<int>(rows[a].size()) != g.n_)
      throw NotClosed(a, static_cast<int>(rows[a].size()),
                      "row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < g.n_; ++b) g.mult_[static_cast<std::size_t>(a) * g.n_ + b] = rows[a][b];
  }
  g.validate();
  g.compute_orders();
  return g;
}

void GroupTable::validate() const {
  const int n = n_;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int p = mult_[static_cast<std::size_t>(a) * n + b];
      if (p < 0 || p >= n)
        throw NotClosed(a, b, "entry (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") = " + std::to_string(p) + " is outside [0," +
                                  std::to_string(n) + ")");
    }
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw NoIdentity("no two-sided identity element");
  const_cast<GroupTable*>(this)->id_ = id;
  auto& inv = const_cast<GroupTable*>(this)->inv_;
  inv.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (mul(x, y) == id && mul(y, x) == id) {
        inv[x] = y;
        break;
      }
    if (inv[x] < 0)
      throw NoInverse(x, "element " + std::to_string(x) + " has no two-sided inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = mul(a, b);
      for (int c = 0; c < n; ++c)
        if (mul(ab, c) != mul(a, mul(b, c)))
          throw NotAssociative(a, b, c, "(" + std::to_string(a) + "*" + std::to_string(b) +
                                            ")*" + std::to_string(c) + " != " +
                                            std::to_string(a) + "*(" + std::to_string(b) + "*" +
                                            std::to_string(c) + ")");
    }
}

void GroupTable::compute_orders() {
  ord_.assign(n_, 1);
  exponent_ = 1;
  for (int x = 0; x < n_; ++x) {
    int k = 1, y = x;
    while (y != id_) {
      y = mul(y, x);
      ++k;
    }
    ord_[x] = k;
    exponent_ = std::lcm(exponent_, k);
  }
}

bool GroupTable::abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

ElementOrderProfile element_order_profile(const GroupTable& g, const ElemSet& members) {
  ElementOrderProfile p;
  members.for_each([&](int x) { p.orders.push_back(g.element_order(x)); });
  std::sort(p.orders.begin(), p.orders.end());
  p.exponent = 1;
  for (int o : p.orders) p.exponent = std::lcm(p.exponent, o);
  p.square_free = square_free(p.exponent);
  return p;
}

ElementOrderProfile element_order_profile(const GroupTable& g) {
  return element_order_profile(g, ElemSet::full(g.order()));
}

Subgroup generated_subgroup(const GroupTable& g, std::span<const int> gens) {
  ElemSet in(g.order());
  std::vector<int> list;
  in.set(g.identity());
  list.push_back(g.identity());
  // breadth-first over words in the generators: every reachable product
  // appears because each frontier element is extended by every generator
  for (std::size_t i = 0; i < list.size(); ++i)
    for (int s : gens) {
      int p = g.mul(list[i], s);
      if (!in.test(p)) {
        in.set(p);
        list.push_back(p);
      }
    }
  return in;
}

Subgroup generated_subgroup(const GroupTable& g, const ElemSet& gens) {
  return generated_subgroup(g, std::span<const int>(gens.to_vector()));
}

bool is_subgroup(const GroupTable& g, const ElemSet& s) {
  if (!s.test(g.identity())) return false;
  auto v = s.to_vector();
  for (int a : v)
    for (int b : v)
      if (!s.test(g.mul(a, b))) return false;
  return true;
}

std::vector<int> small_generating_set(const GroupTable& g, const ElemSet& h) {
  std::vector<int> gens;
  ElemSet cur = ElemSet::single(g.order(), g.identity());
  for (int x = h.first(); x >= 0; x = h.next(x)) {
    if (cur.test(x)) continue;
    gens.push_back(x);
    cur = generated_subgroup(g, gens);
    if (cur == h) break;
  }
  return gens;  // empty for the trivial subgroup
}

bool is_normal_in(const GroupTable& g, const ElemSet& h, const ElemSet& k) {
  for (int t = k.first(); t >= 0; t = k.next(t))
    for (int x = h.first(); x >= 0; x = h.next(x))
      if (!h.test(g.conj(t, x))) return false;
  return true;
}

bool is_normal(const GroupTable& g, const ElemSet& h) {
  return is_normal_in(g, h, ElemSet::full(g.order()));
}

ElemSet conjugate_subgroup(const GroupTable& g, const ElemSet& h, int x) {
  ElemSet r(g.order());
  h.for_each([&](int e) { r.set(g.conj(x, e)); });
  return r;
}

Subgroup core(const GroupTable& g, const ElemSet& h) {
  ElemSet acc = h;
  for (int x = 0; x < g.order(); ++x) acc &= conjugate_subgroup(g, h, x);
  return acc;
}

Subgroup normal_closure(const GroupTable& g, const ElemSet& k, const ElemSet& h) {
  std::vector<int> gens;
  auto hgens = small_generating_set(g, h);
  for (int t = k.first(); t >= 0; t = k.next(t))
    for (int x : hgens) gens.push_back(g.conj(t, x));
  if (gens.empty()) return ElemSet::single(g.order(), g.identity());
  return generated_subgroup(g, gens);
}

bool is_subnormal(const GroupTable& g, const ElemSet& h, const ElemSet& k) {
  ElemSet cur = k;
  while (true) {
    if (cur == h) return true;
    ElemSet next = normal_closure(g, cur, h);
    if (next == cur) return false;
    cur = next;
  }
}

Subgroup centralizer(const GroupTable& g, const ElemSet& s) {
  ElemSet r(g.order());
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int y = s.first(); ok && y >= 0; y = s.next(y)) ok = g.mul(x, y) == g.mul(y, x);
    if (ok) r.set(x);
  }
  return r;
}

Subgroup center(const GroupTable& g) { return centralizer(g, ElemSet::full(g.order())); }

Subgroup normalizer(const GroupTable& g, const ElemSet& h) {
  ElemSet r(g.order());
  for (int x = 0; x < g.order(); ++x)
    if (conjugate_subgroup(g, h, x) == h) r.set(x);
  return r;
}

Subgroup derived_of(const GroupTable& g, const ElemSet& h) {
  std::vector<int> comms;
  auto v = h.to_vector();
  ElemSet seen(g.order());
  for (int a : v)
    for (int b : v) {
      int c = g.comm(a, b);
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    }
  return generated_subgroup(g, comms);
}

Subgroup derived_subgroup(const GroupTable& g) {
  return derived_of(g, ElemSet::full(g.order()));
}

bool is_solvable_subset(const GroupTable& g, const ElemSet& h) {
  ElemSet cur = h;
  while (cur.count() > 1) {
    ElemSet next = derived_of(g, cur);
    if (next == cur) return false;
    cur = next;
  }
  return true;
}

bool commutes_pairwise(const GroupTable& g, const ElemSet& h) {
  auto v = h.to_vector();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (g.mul(v[i], v[j]) != g.mul(v[j], v[i])) return false;
  return true;
}

QuotientTable quotient(const GroupTable& g, const ElemSet& n) {
  if (!is_normal(g, n))
    throw NotNormal("quotient by a non-normal subgroup of " + g.label());
  const int sz = g.order();
  std::vector<int> proj(sz, -1);
  std::vector<int> reps;
  for (int x = 0; x < sz; ++x) {
    if (proj[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    n.for_each([&](int e) { proj[g.mul(x, e)] = id; });
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> rows(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) rows[i][j] = proj[g.mul(reps[i], reps[j])];
  QuotientTable out{GroupTable::from_table(rows, g.label() + "/N" + std::to_string(n.count())),
                    std::move(proj)};
  return out;
}

ExtractedTable extract_subgroup(const GroupTable& g, const ElemSet& h) {
  std::vector<int> to_parent = h.to_vector();
  const int m = static_cast<int>(to_parent.size());
  std::vector<int> back(g.order(), -1);
  for (int i = 0; i < m; ++i) back[to_parent[i]] = i;
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = back[g.mul(to_parent[i], to_parent[j])];
      if (p < 0) throw NotClosed(i, j, "subgroup extraction from a non-closed set");
      rows[i][j] = p;
    }
  return {GroupTable::from_table(rows, g.label() + "|" + std::to_string(m)),
          std::move(to_parent)};
}

ElemSet set_product(const GroupTable& g, const ElemSet& a, const ElemSet& b) {
  ElemSet r(g.order());
  for (int x = a.first(); x >= 0; x = a.next(x))
    for (int y = b.first(); y >= 0; y = b.next(y)) r.set(g.mul(x, y));
  return r;
}

}  // namespace submod
