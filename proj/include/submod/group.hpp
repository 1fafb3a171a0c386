// Finite group kernel: a dense multiplication table over elements
// {0..n-1}, validated on construction, plus the element-level operations
// everything else is built from (closure, conjugation, commutators,
// quotients, subgroup extraction).
//
// A subgroup is an ElemSet over the parent's elements; operations returning
// subgroups always return closed sets containing the identity.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "submod/elemset.hpp"
#include "submod/errors.hpp"

namespace submod {

using Subgroup = ElemSet;  // members of a subgroup of the parent table

class GroupTable {
public:
  // Validates: totality/range, two-sided identity, two-sided inverses,
  // associativity (full n^3 scan). Throws NotClosed / NoIdentity /
  // NoInverse / NotAssociative naming the offending entry.
  static GroupTable from_table(const std::vector<std::vector<int>>& rows, std::string label);

  int order() const { return n_; }
  int mul(int a, int b) const { return mult_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return id_; }
  // g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  // [a,b] = a b a^-1 b^-1
  int comm(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  int element_order(int x) const { return ord_[x]; }
  const std::vector<int>& element_orders() const { return ord_; }
  int exponent() const { return exponent_; }
  bool abelian() const;

  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

private:
  GroupTable() = default;
  void validate() const;
  void compute_orders();

  int n_ = 0;
  int id_ = 0;
  int exponent_ = 1;
  std::vector<int> mult_;
  std::vector<int> inv_;
  std::vector<int> ord_;
  std::string label_;
};

// orders of the elements of a subgroup, ascending, plus their lcm
struct ElementOrderProfile {
  std::vector<int> orders;
  int exponent = 1;
  bool square_free = false;
};
ElementOrderProfile element_order_profile(const GroupTable& g);
ElementOrderProfile element_order_profile(const GroupTable& g, const ElemSet& members);

// subgroup generated by gens (empty list -> trivial subgroup)
Subgroup generated_subgroup(const GroupTable& g, std::span<const int> gens);
Subgroup generated_subgroup(const GroupTable& g, const ElemSet& gens);

// closed under multiplication and contains the identity?
bool is_subgroup(const GroupTable& g, const ElemSet& s);

// greedy inclusion-minimal-ish generating list for h, deterministic
std::vector<int> small_generating_set(const GroupTable& g, const ElemSet& h);

bool is_normal(const GroupTable& g, const ElemSet& h);
// h normal inside k (h <= k assumed)
bool is_normal_in(const GroupTable& g, const ElemSet& h, const ElemSet& k);
ElemSet conjugate_subgroup(const GroupTable& g, const ElemSet& h, int x);
// intersection of all conjugates of h: the largest normal subgroup inside h
Subgroup core(const GroupTable& g, const ElemSet& h);
// smallest subgroup of k containing h and normal in k
Subgroup normal_closure(const GroupTable& g, const ElemSet& k, const ElemSet& h);
// does the descending normal-closure series from k reach h?
bool is_subnormal(const GroupTable& g, const ElemSet& h, const ElemSet& k);

Subgroup centralizer(const GroupTable& g, const ElemSet& s);
Subgroup center(const GroupTable& g);
Subgroup normalizer(const GroupTable& g, const ElemSet& h);
Subgroup derived_subgroup(const GroupTable& g);
// derived subgroup of a subgroup, computed inside the parent
Subgroup derived_of(const GroupTable& g, const ElemSet& h);
// derived series of h terminates at the trivial subgroup?
bool is_solvable_subset(const GroupTable& g, const ElemSet& h);
bool commutes_pairwise(const GroupTable& g, const ElemSet& h);

// G/N with cosets numbered by smallest member element; proj maps each
// element to its coset index, identity coset is 0. Throws NotNormal.
struct QuotientTable {
  GroupTable table;
  std::vector<int> proj;
};
QuotientTable quotient(const GroupTable& g, const ElemSet& n);

// standalone table for a subgroup; to_parent maps new indices back
struct ExtractedTable {
  GroupTable table;
  std::vector<int> to_parent;
};
ExtractedTable extract_subgroup(const GroupTable& g, const ElemSet& h);

// set product {a*b : a in A, b in B} literally, as an element set
ElemSet set_product(const GroupTable& g, const ElemSet& a, const ElemSet& b);

}  // namespace submod
