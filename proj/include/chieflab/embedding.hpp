#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chieflab/group.hpp"
#include "chieflab/normal.hpp"
#include "chieflab/subgroup.hpp"

namespace chieflab {

/// Outcome of an embedding predicate.
///
/// Existential predicates (partial S-Pi, partial Pi) carry a witness chief
/// series when they hold. Universal predicates (CAP, generalized CAP)
/// carry the first violating chief factor when they fail.
struct Verdict {
  struct Refutation {
    NodeId lower = 0;
    NodeId upper = 0;
    std::string clause;
  };

  bool holds = false;
  std::vector<NodeId> witness;
  std::optional<Refutation> refutation;
};

/// The per-chief-factor data every predicate starts from: X = (H ^ L) K.
struct FactorSection {
  Subgroup X;
  std::size_t factor_order = 0;   // |L : K|
  std::size_t section_order = 0;  // |X : K|
};

FactorSection factor_section(const Group& G, const Subgroup& H, NodeId lower, NodeId upper);

/// |G : N_G(X)|
std::size_t normalizer_index(const Group& G, const Subgroup& X);

/// The per-factor clause of the partial S-Pi-property for the cover K < L:
/// (H ^ L)K/K is a Sylow p-subgroup of L/K, or |G : N_G((H ^ L)K)| is a
/// p-number. N_{G/K}(X/K) = N_G(X)/K because K <= X and K is normal, so
/// no quotient is formed.
bool partial_s_pi_factor(const Group& G, const Subgroup& H, std::uint64_t p, NodeId lower, NodeId upper);
bool partial_pi_factor(const Group& G, const Subgroup& H, NodeId lower, NodeId upper);

/// Some chief series satisfies the per-factor clause at every step. Solved
/// as reachability from the trivial node to G over passing cover pairs.
/// Throws std::invalid_argument unless p is prime and H is a p-group.
Verdict partial_s_pi(const Group& G, const Subgroup& H, std::uint64_t p);
Verdict partial_pi(const Group& G, const Subgroup& H);

/// H covers or avoids every G-chief factor.
Verdict cap(const Group& G, const Subgroup& H);
/// Every G-chief factor is avoided, or satisfies the non-abelian/p-group
/// conditions of the generalized cover-avoidance property.
Verdict gen_cap(const Group& G, const Subgroup& H);

/// H permutes with every Sylow subgroup of G.
bool s_quasinormal(const Group& G, const Subgroup& H);

struct SqeSearch {
  bool holds = false;
  /// Per prime q dividing |H|: the S-quasinormal overgroup found, if any.
  std::vector<std::pair<std::uint64_t, std::optional<Subgroup>>> witnesses;
  std::size_t candidates_tried = 0;
};

/// Each Sylow subgroup of H is a Sylow subgroup of some S-quasinormal
/// subgroup. Candidates are the normal subgroups of G and the joins of
/// H's Sylow q-subgroup with them; the search is sound for "true" only.
SqeSearch s_qn_embedded_search(const Group& G, const Subgroup& H);
bool s_qn_embedded(const Group& G, const Subgroup& H);

}  // namespace chieflab
