#include "submod/formations.hpp"

#include <array>

#include "submod/numtheory.hpp"

namespace submod {

namespace {

struct FormationInfo {
  Formation f;
  std::string_view token;
  std::string_view name;
  std::string_view symbol;
  bool saturated;
};

constexpr std::array<FormationInfo, kFormationCount> kFormations{{
    {Formation::Abelian, "Ab", "abelian", "𝔄", false},
    {Formation::AbelianSqf, "Ab1", "abelian of square-free exponent", "𝔄₁", false},
    {Formation::Nilpotent, "N", "nilpotent", "𝔑", true},
    {Formation::Metanilpotent, "N2", "metanilpotent", "𝔑²", false},
    {Formation::Supersolvable, "U", "supersolvable", "𝔘", true},
    {Formation::SupersolvableSqf, "U1", "supersolvable of square-free exponent", "𝔘₁", false},
    {Formation::Solvable, "S", "solvable", "𝔖", true},
    {Formation::AbelianSylow, "A", "abelian Sylow subgroups", "𝒜", false},
    {Formation::AbelianSylowSqf, "A1", "abelian Sylow subgroups, square-free exponent", "𝒜₁", false},
    {Formation::SylowTowerSup, "D", "Sylow tower of supersolvable type", "𝔇", true},
    {Formation::Z, "Z", "all Sylow subgroups submodular", "ℨ", true},
    {Formation::C, "C", "all cyclic primary subgroups submodular", "ℭ", true},
    {Formation::NilpotentByAbelianSylow, "NA", "nilpotent A-residual", "𝔑𝒜", false},
    {Formation::NilpotentByAbelianSylowSqf, "NA1", "nilpotent A1-residual", "𝔑𝒜₁", false},
}};

const FormationInfo& info(Formation f) {
  return kFormations[static_cast<std::size_t>(f)];
}

bool compute_in_class(GroupAnalysis& ctx, int idx, Formation f);

// Sylow subgroup for the largest prime is normal; recurse on the quotient.
bool sylow_tower_sup_top(GroupAnalysis& a) {
  int n = a.group().order();
  if (n == 1) return true;
  auto& lat = a.lattice();
  int p = prime_divisors(n).back();
  int normal_sylow = -1;
  for (int s : lat.sylow_in(lat.top(), p))
    if (lat.is_normal_in_group(s)) {
      normal_sylow = s;
      break;
    }
  if (normal_sylow < 0) return false;
  auto& qa = a.quotient_analysis(normal_sylow);
  return in_class(qa, qa.top(), Formation::SylowTowerSup);
}

bool compute_in_class(GroupAnalysis& ctx, int idx, Formation f) {
  const GroupTable& g = ctx.group();
  auto& lat = ctx.lattice();
  const ElemSet& mem = lat.members(idx);
  switch (f) {
    case Formation::Abelian:
      return commutes_pairwise(g, mem);
    case Formation::AbelianSqf:
      return in_class(ctx, idx, Formation::Abelian) &&
             element_order_profile(g, mem).square_free;
    case Formation::Nilpotent:
      return lat.nilpotent_member(idx);
    case Formation::Solvable:
      return is_solvable_subset(g, mem);
    case Formation::AbelianSylow: {
      for (int p : prime_divisors(lat.order_of(idx)))
        for (int s : lat.sylow_in(idx, p))
          if (!commutes_pairwise(g, lat.members(s))) return false;
      return true;
    }
    case Formation::AbelianSylowSqf:
      return in_class(ctx, idx, Formation::AbelianSylow) &&
             element_order_profile(g, mem).square_free;
    case Formation::Z: {
      for (int p : prime_divisors(lat.order_of(idx)))
        for (int s : lat.sylow_in(idx, p))
          if (!ctx.is_submodular(s, idx)) return false;
      return true;
    }
    case Formation::C: {
      for (int s : lat.below(idx))
        if (lat.is_cyclic(s) && prime_power_base(lat.order_of(s)) != 0 &&
            !ctx.is_submodular(s, idx))
          return false;
      return true;
    }
    case Formation::Supersolvable: {
      auto& ma = ctx.member_analysis(idx);
      if (!ma.solvable()) return false;
      for (int q : ma.chief_factor_orders())
        if (!is_prime(q)) return false;
      return true;
    }
    case Formation::SupersolvableSqf:
      return in_class(ctx, idx, Formation::Supersolvable) &&
             element_order_profile(g, mem).square_free;
    case Formation::SylowTowerSup:
      return sylow_tower_sup_top(ctx.member_analysis(idx));
    case Formation::Metanilpotent: {
      auto& ma = ctx.member_analysis(idx);
      int r = residual_idx(ma, Formation::Nilpotent);
      return in_class(ma, r, Formation::Nilpotent);
    }
    case Formation::NilpotentByAbelianSylow: {
      auto& ma = ctx.member_analysis(idx);
      int r = residual_idx(ma, Formation::AbelianSylow);
      return in_class(ma, r, Formation::Nilpotent);
    }
    case Formation::NilpotentByAbelianSylowSqf: {
      auto& ma = ctx.member_analysis(idx);
      int r = residual_idx(ma, Formation::AbelianSylowSqf);
      return in_class(ma, r, Formation::Nilpotent);
    }
  }
  throw Error("unhandled formation id");
}

}  // namespace

const std::vector<Formation>& registered_formations() {
  static const std::vector<Formation> all = [] {
    std::vector<Formation> v;
    for (const auto& fi : kFormations) v.push_back(fi.f);
    return v;
  }();
  return all;
}

std::string_view formation_token(Formation f) { return info(f).token; }
std::string_view formation_name(Formation f) { return info(f).name; }
std::string_view formation_symbol(Formation f) { return info(f).symbol; }
bool formation_is_saturated(Formation f) { return info(f).saturated; }

std::optional<Formation> parse_formation(std::string_view token) {
  for (const auto& fi : kFormations)
    if (fi.token == token) return fi.f;
  return std::nullopt;
}

bool in_class(GroupAnalysis& ctx, int idx, Formation f) {
  auto key = std::make_pair(idx, static_cast<int>(f));
  if (auto it = ctx.class_cache.find(key); it != ctx.class_cache.end())
    return it->second;
  bool r = compute_in_class(ctx, idx, f);
  ctx.class_cache.emplace(key, r);
  return r;
}

bool in_class(GroupAnalysis& ctx, Formation f) {
  return in_class(ctx, ctx.top(), f);
}

ResidualResult residual(GroupAnalysis& ctx, Formation f) {
  auto& lat = ctx.lattice();
  ResidualResult rr{f, lat.top(), {}};
  for (int n : lat.normal_indices()) {
    auto& qa = ctx.quotient_analysis(n);
    if (in_class(qa, qa.top(), f)) {
      rr.witnesses.push_back(n);
      rr.residual = lat.meet(rr.residual, n);
    }
  }
  auto& ra = ctx.quotient_analysis(rr.residual);
  if (!in_class(ra, ra.top(), f))
    throw ResidualClosureFailure(
        "quotient by the " + std::string(formation_token(f)) +
        "-residual of " + ctx.group().label() + " is not in the class");
  ctx.residual_cache.emplace(std::make_pair(lat.top(), static_cast<int>(f)),
                             rr.residual);
  return rr;
}

int residual_idx(GroupAnalysis& ctx, Formation f) {
  auto key = std::make_pair(ctx.top(), static_cast<int>(f));
  if (auto it = ctx.residual_cache.find(key); it != ctx.residual_cache.end())
    return it->second;
  return residual(ctx, f).residual;
}

int member_residual_idx(GroupAnalysis& ctx, int idx, Formation f) {
  if (idx == ctx.top()) return residual_idx(ctx, f);
  auto key = std::make_pair(idx, static_cast<int>(f));
  if (auto it = ctx.residual_cache.find(key); it != ctx.residual_cache.end())
    return it->second;
  auto& ma = ctx.member_analysis(idx);
  int lifted = ctx.lift_member_subgroup(idx, residual_idx(ma, f));
  ctx.residual_cache.emplace(key, lifted);
  return lifted;
}

int b_operator(GroupAnalysis& ctx) {
  auto& lat = ctx.lattice();
  int acc = lat.top();
  for (int n : lat.normal_indices()) {
    int q = ctx.group().order() / lat.order_of(n);
    if (prime_divisors(q).size() <= 2) acc = lat.meet(acc, n);
  }
  return acc;
}

bool is_siding(GroupAnalysis& ctx) {
  auto& lat = ctx.lattice();
  for (int s : lat.below(ctx.derived_index()))
    if (!lat.is_normal_in_group(s)) return false;
  return true;
}

bool frattini_quotient_in(GroupAnalysis& ctx, Formation f) {
  auto& qa = ctx.quotient_analysis(ctx.frattini_index());
  return in_class(qa, qa.top(), f);
}

}  // namespace submod
