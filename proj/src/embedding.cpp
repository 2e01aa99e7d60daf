#include "chieflab/embedding.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "chieflab/classify.hpp"

namespace chieflab {

FactorSection factor_section(const Group& G, const Subgroup& H, NodeId lower, NodeId upper) {
  const auto& lattice = normal_lattice(G);
  const Subgroup& K = lattice.node(lower);
  const Subgroup& L = lattice.node(upper);
  FactorSection s;
  s.X = join(intersect(H, L), K);
  s.factor_order = L.order() / K.order();
  s.section_order = s.X.order() / K.order();
  return s;
}

std::size_t normalizer_index(const Group& G, const Subgroup& X) {
  if (is_normal(X)) return 1;
  std::size_t count = 0;
  for (Elem g = 0; g < G.order(); ++g) {
    if (is_normalized_by(X, g)) ++count;
  }
  return G.order() / count;
}

bool partial_s_pi_factor(const Group& G, const Subgroup& H, std::uint64_t p, NodeId lower, NodeId upper) {
  const FactorSection s = factor_section(G, H, lower, upper);
  if (s.section_order == p_part(s.factor_order, p)) return true;
  return is_p_number(normalizer_index(G, s.X), p);
}

bool partial_pi_factor(const Group& G, const Subgroup& H, NodeId lower, NodeId upper) {
  const FactorSection s = factor_section(G, H, lower, upper);
  const auto primes = prime_divisors(s.section_order);
  return is_pi_number(normalizer_index(G, s.X), primes);
}

namespace {

template <class Passes>
Verdict reachability(const Group& G, Passes&& passes) {
  const auto& lattice = normal_lattice(G);
  constexpr NodeId kUnseen = ~NodeId{0};
  std::vector<NodeId> parent(lattice.size(), kUnseen);
  std::deque<NodeId> queue{lattice.bottom()};
  parent[lattice.bottom()] = lattice.bottom();
  while (!queue.empty()) {
    const NodeId k = queue.front();
    queue.pop_front();
    if (k == lattice.top()) break;
    for (NodeId l : lattice.covers_above(k)) {
      if (parent[l] != kUnseen) continue;
      if (!passes(k, l)) continue;
      parent[l] = k;
      queue.push_back(l);
    }
  }
  Verdict v;
  v.holds = parent[lattice.top()] != kUnseen;
  if (v.holds) {
    for (NodeId n = lattice.top(); n != lattice.bottom(); n = parent[n]) v.witness.push_back(n);
    v.witness.push_back(lattice.bottom());
    std::reverse(v.witness.begin(), v.witness.end());
  }
  return v;
}

void require_same_group(const Group& G, const Subgroup& H) {
  if (H.parent_ptr().get() != &G) throw std::invalid_argument("subgroup belongs to a different group");
}

}  // namespace

Verdict partial_s_pi(const Group& G, const Subgroup& H, std::uint64_t p) {
  require_same_group(G, H);
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (!is_p_group(H, p)) {
    throw std::invalid_argument("subgroup of order " + std::to_string(H.order()) + " is not a " +
                                std::to_string(p) + "-group");
  }
  return reachability(G, [&](NodeId k, NodeId l) { return partial_s_pi_factor(G, H, p, k, l); });
}

Verdict partial_pi(const Group& G, const Subgroup& H) {
  require_same_group(G, H);
  return reachability(G, [&](NodeId k, NodeId l) { return partial_pi_factor(G, H, k, l); });
}

namespace {

bool factor_is_abelian(const Group& G, const Subgroup& K, const Subgroup& L) {
  for (Elem a : L.generators()) {
    for (Elem b : L.generators()) {
      if (!K.contains(G.commutator(a, b))) return false;
    }
  }
  return true;
}

template <class Check>
Verdict every_factor(const Group& G, Check&& check) {
  const auto& lattice = normal_lattice(G);
  Verdict v;
  v.holds = true;
  for (NodeId k = 0; k < lattice.size(); ++k) {
    for (NodeId l : lattice.covers_above(k)) {
      std::string clause;
      if (!check(k, l, clause)) {
        v.holds = false;
        v.refutation = Verdict::Refutation{k, l, std::move(clause)};
        return v;
      }
    }
  }
  return v;
}

}  // namespace

Verdict cap(const Group& G, const Subgroup& H) {
  require_same_group(G, H);
  const auto& lattice = normal_lattice(G);
  return every_factor(G, [&](NodeId k, NodeId l, std::string& clause) {
    const Subgroup& K = lattice.node(k);
    const Subgroup& L = lattice.node(l);
    if (intersect(H, L).is_subgroup_of(K)) return true;
    if (L.is_subgroup_of(join(H, K))) return true;
    clause = "neither covers nor avoids";
    return false;
  });
}

Verdict gen_cap(const Group& G, const Subgroup& H) {
  require_same_group(G, H);
  const auto& lattice = normal_lattice(G);
  return every_factor(G, [&](NodeId k, NodeId l, std::string& clause) {
    const Subgroup& K = lattice.node(k);
    const Subgroup& L = lattice.node(l);
    const FactorSection s = factor_section(G, H, k, l);
    if (s.section_order == 1) return true;  // avoids
    if (!factor_is_abelian(G, K, L)) {
      const std::size_t index = L.order() / s.X.order();
      for (std::uint64_t q : prime_divisors(s.section_order)) {
        if (index % q == 0) {
          clause = "non-abelian factor: |L:(H^L)K| = " + std::to_string(index) + " is not a " +
                   std::to_string(q) + "'-number";
          return false;
        }
      }
      return true;
    }
    const std::uint64_t q = prime_power_base(s.factor_order);
    const std::size_t index = normalizer_index(G, s.X);
    if (!is_p_number(index, q)) {
      clause = std::to_string(q) + "-group factor: |G:N_G((H^L)K)| = " + std::to_string(index) +
               " is not a " + std::to_string(q) + "-number";
      return false;
    }
    return true;
  });
}

namespace {

bool permutes(const Subgroup& A, const Subgroup& B) {
  if (A.is_subgroup_of(B) || B.is_subgroup_of(A)) return true;
  return join(A, B).order() * intersect(A, B).order() == A.order() * B.order();
}

}  // namespace

bool s_quasinormal(const Group& G, const Subgroup& H) {
  require_same_group(G, H);
  if (is_normal(H)) return true;
  for (std::uint64_t p : prime_divisors(G.order())) {
    for (const auto& S : sylow_subgroups(G, p)) {
      if (!permutes(H, S)) return false;
    }
  }
  return true;
}

SqeSearch s_qn_embedded_search(const Group& G, const Subgroup& H) {
  require_same_group(G, H);
  const auto& lattice = normal_lattice(G);
  SqeSearch out;
  out.holds = true;
  for (std::uint64_t q : prime_divisors(H.order())) {
    const Subgroup Hq = sylow(H, q);
    std::optional<Subgroup> found;
    std::set<ElementSet> tried;
    auto consider = [&](const Subgroup& W) {
      if (found || !tried.insert(W.members()).second) return;
      ++out.candidates_tried;
      if (!Hq.is_subgroup_of(W) || p_part(W.order(), q) != Hq.order()) return;
      if (s_quasinormal(G, W)) found = W;
    };
    for (const auto& N : lattice.nodes()) consider(N);
    for (const auto& N : lattice.nodes()) consider(join(Hq, N));
    if (!found) out.holds = false;
    out.witnesses.emplace_back(q, std::move(found));
  }
  return out;
}

bool s_qn_embedded(const Group& G, const Subgroup& H) { return s_qn_embedded_search(G, H).holds; }

}  // namespace chieflab
