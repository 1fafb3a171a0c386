// Independent reference implementations used to cross-check the library.
// Everything here is deliberately naive: subset scans, closure by fixpoint,
// chain search over every intermediate subgroup.  No code is shared with the
// optimized paths under src/.
#pragma once

#include <vector>

#include "submod/group.hpp"

namespace submod::oracle {

// closure of `seed` under multiplication (finite, so inverses come free)
ElemSet close(const GroupTable& g, ElemSet seed);

// every subgroup, found by repeatedly extending known subgroups by one
// element and closing; sorted canonically
std::vector<ElemSet> enumerate_subgroups(const GroupTable& g);

// every subset of size dividing |G| that contains the identity and is
// closed under multiplication; feasible for |G| <= 24
std::vector<ElemSet> all_closed_subsets(const GroupTable& g);

// two-sided modular-element law for h inside k, evaluated over an explicit
// subgroup list with intersection meets and closure joins
bool modular_in(const GroupTable& g, const std::vector<ElemSet>& subs,
                const ElemSet& h, const ElemSet& k);

// chain search allowing ANY modular step (not only maximal modular ones)
bool submodular(const GroupTable& g, const std::vector<ElemSet>& subs,
                const ElemSet& h, const ElemSet& k);

// chain search over prime-index steps
bool p_subnormal(const GroupTable& g, const std::vector<ElemSet>& subs,
                 const ElemSet& h, const ElemSet& k);

// literal element-wise product {ab : a in A, b in B}
ElemSet set_product(const GroupTable& g, const ElemSet& a, const ElemSet& b);

// subgroup generated by all commutators [a,b], a in A, b in B
ElemSet commutator_subgroup(const GroupTable& g, const ElemSet& a,
                            const ElemSet& b);

// lower central series of h terminates at the trivial subgroup
bool nilpotent_lcs(const GroupTable& g, const ElemSet& h);

// derived series of h terminates at the trivial subgroup
bool solvable_derived_series(const GroupTable& g, const ElemSet& h);

// every maximal subgroup has prime index (Huppert's criterion)
bool supersolvable_prime_index(const GroupTable& g,
                               const std::vector<ElemSet>& subs);

}  // namespace submod::oracle
