#pragma once
// Group-class predicates and formation residuals.
//
// Fourteen classes are registered.  Tokens (ASCII, used by the CLI and in
// reports) and the classes they denote:
//   Ab   abelian groups
//   Ab1  abelian groups of square-free exponent
//   N    nilpotent groups (every Sylow subgroup normal)
//   N2   metanilpotent groups (nilpotent residual is nilpotent)
//   U    supersolvable groups (all chief factors of prime order)
//   U1   supersolvable groups of square-free exponent
//   S    solvable groups
//   A    groups whose Sylow subgroups are all abelian
//   A1   members of A with square-free exponent
//   D    groups with a Sylow tower of supersolvable type (the Sylow
//        subgroup for the largest prime is normal, recursively)
//   Z    groups whose Sylow subgroups are all submodular
//   C    groups whose cyclic prime-power-order subgroups are all submodular
//   NA   groups whose A-residual is nilpotent
//   NA1  groups whose A1-residual is nilpotent
//
// Every class here is a formation (closed under quotients and subdirect
// products), so the residual G^F exists and equals the intersection of all
// normal subgroups with quotient in F.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "submod/analysis.hpp"

namespace submod {

enum class Formation : int {
  Abelian,
  AbelianSqf,
  Nilpotent,
  Metanilpotent,
  Supersolvable,
  SupersolvableSqf,
  Solvable,
  AbelianSylow,
  AbelianSylowSqf,
  SylowTowerSup,
  Z,
  C,
  NilpotentByAbelianSylow,
  NilpotentByAbelianSylowSqf,
};

inline constexpr int kFormationCount = 14;

const std::vector<Formation>& registered_formations();
std::string_view formation_token(Formation f);   // "Ab", "N2", "NA1", ...
std::string_view formation_name(Formation f);    // human-readable
std::string_view formation_symbol(Formation f);  // UTF-8 class symbol
std::optional<Formation> parse_formation(std::string_view token);
// closed under Frattini extensions (G/Phi(G) in F implies G in F)
bool formation_is_saturated(Formation f);

// Membership of subgroup #idx of ctx's lattice (idx = top: the group itself).
bool in_class(GroupAnalysis& ctx, int idx, Formation f);
bool in_class(GroupAnalysis& ctx, Formation f);

// Residual of the whole group: least normal subgroup with quotient in f.
// `witnesses` lists every normal subgroup whose quotient is in f; the
// residual is their intersection.  Throws ResidualClosureFailure if the
// quotient by the computed residual fails membership (internal alarm).
struct ResidualResult {
  Formation formation;
  int residual;                // lattice index in ctx
  std::vector<int> witnesses;  // normal subgroup indices, ascending
};
ResidualResult residual(GroupAnalysis& ctx, Formation f);
int residual_idx(GroupAnalysis& ctx, Formation f);
// Residual of member subgroup #idx, returned as an index of ctx's lattice.
int member_residual_idx(GroupAnalysis& ctx, int idx, Formation f);

// Intersection of all normal subgroups N such that at most two distinct
// primes divide |G/N|.
int b_operator(GroupAnalysis& ctx);

// Every subgroup of the derived subgroup is normal in the whole group.
bool is_siding(GroupAnalysis& ctx);

// G/Phi(G) in f.
bool frattini_quotient_in(GroupAnalysis& ctx, Formation f);

}  // namespace submod
