#pragma once

#include <cstdint>
#include <vector>

#include "chieflab/group.hpp"
#include "chieflab/normal.hpp"
#include "chieflab/subgroup.hpp"

namespace chieflab {

/// A Sylow p-subgroup of H, grown deterministically inside normalizers.
/// Returns the trivial subgroup when p does not divide |H|.
Subgroup sylow(const Subgroup& H, std::uint64_t p);
Subgroup sylow(const Group& G, std::uint64_t p);
/// Every Sylow p-subgroup of G (the conjugates of sylow(G, p)). Cached.
const std::vector<Subgroup>& sylow_subgroups(const Group& G, std::uint64_t p);

// Radicals of a normal subgroup E of G. These are characteristic in E and
// hence G-normal, so they are read off G's normal lattice.
Subgroup radical_p_in(const Group& G, const Subgroup& E, std::uint64_t p);
Subgroup radical_p_prime_in(const Group& G, const Subgroup& E, std::uint64_t p);
Subgroup fitting_in(const Group& G, const Subgroup& E);
/// O_{p',p}(E): the largest p-nilpotent normal subgroup of E.
Subgroup fitting_p_in(const Group& G, const Subgroup& E, std::uint64_t p);

Subgroup radical_p(const Group& G, std::uint64_t p);
Subgroup radical_p_prime(const Group& G, std::uint64_t p);
Subgroup fitting(const Group& G);
Subgroup fitting_p(const Group& G, std::uint64_t p);

/// Orders of the G-chief factors of one G-chief series through a normal E, below E.
std::vector<std::size_t> chief_factor_orders_below(const Group& G, const Subgroup& E);

bool is_p_nilpotent_in(const Group& G, const Subgroup& E, std::uint64_t p);
bool is_p_soluble_in(const Group& G, const Subgroup& E, std::uint64_t p);

bool is_p_nilpotent(const Group& G, std::uint64_t p);
bool is_p_soluble(const Group& G, std::uint64_t p);
bool is_soluble_by_chief_factors(const Group& G);
bool is_soluble_by_derived_series(const Group& G);
/// Both routes; throws std::logic_error if they disagree.
bool is_soluble(const Group& G);
/// Every Sylow subgroup is normal.
bool is_nilpotent(const Group& G);
bool is_abelian(const Group& G);
bool is_supersoluble(const Group& G);
bool is_p_supersoluble(const Group& G, std::uint64_t p);

Subgroup hypercentre(const Group& G);
/// Z_U(G): stacks G-chief factors of prime order from the bottom.
///
/// A chief factor L/K of prime order q is U-central: G/C_G(L/K) embeds in
/// Aut(C_q), which is cyclic, so (L/K) x| G/C_G(L/K) is supersoluble. A
/// chief factor of any other order is a minimal normal subgroup of that
/// semidirect product and so cannot be U-central.
Subgroup u_hypercentre(const Group& G);
/// F*(G)/F(G) = Soc(F(G) C_G(F(G)) / F(G)).
Subgroup f_star(const Group& G);
Subgroup nilpotent_residual(const Group& G);

struct PrimeReport {
  std::uint64_t p = 0;
  bool p_soluble = false;
  bool p_supersoluble = false;
  bool p_nilpotent = false;
  Subgroup sylow;
  Subgroup o_p;
  Subgroup o_p_prime;
  Subgroup fitting_p;
};

struct ClassReport {
  std::size_t order = 0;
  bool abelian = false;
  bool nilpotent = false;
  bool soluble = false;
  bool supersoluble = false;
  Subgroup center;
  Subgroup hypercentre;
  Subgroup u_hypercentre;
  Subgroup fitting;
  Subgroup f_star;
  Subgroup nilpotent_residual;
  Subgroup derived;
  std::vector<PrimeReport> primes;
};

ClassReport class_report(const Group& G);

}  // namespace chieflab
