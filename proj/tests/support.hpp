#pragma once
// Shared helpers for the test suites: group construction shortcuts and
// brute-force oracles that avoid the library's own algorithms.

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "chieflab/catalog.hpp"
#include "chieflab/classify.hpp"
#include "chieflab/embedding.hpp"
#include "chieflab/group.hpp"
#include "chieflab/normal.hpp"
#include "chieflab/perm.hpp"
#include "chieflab/subgroup.hpp"

namespace testing {

using namespace chieflab;

inline GroupPtr make(const std::string& expr) { return build(parse_expr(expr)); }

inline Elem el(const Group& G, const std::string& cycles) {
  auto idx = G.index_of(parse_cycles(cycles, G.degree()));
  if (!idx) throw std::invalid_argument("not an element: " + cycles);
  return *idx;
}

inline Subgroup sub(const Group& G, std::initializer_list<std::string> gens) {
  std::vector<Elem> seed;
  for (const auto& g : gens) seed.push_back(el(G, g));
  return span(G, seed);
}

// Closure by repeated multiplication of the whole set against itself.
inline ElementSet brute_closure(const Group& G, std::vector<Elem> seed) {
  ElementSet s = G.empty_set();
  s.set(Group::identity());
  for (Elem x : seed) s.set(x);
  bool grew = true;
  while (grew) {
    grew = false;
    const auto cur = s.to_vector();
    for (Elem a : cur) {
      for (Elem b : cur) {
        Elem c = G.mul(a, b);
        if (!s.test(c)) {
          s.set(c);
          grew = true;
        }
      }
    }
  }
  return s;
}

inline std::size_t brute_normalizer_order(const Group& G, const Subgroup& H) {
  std::size_t n = 0;
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem h : H.elements()) {
      if (!H.contains(G.conj(h, g))) {
        ok = false;
        break;
      }
    }
    n += ok;
  }
  return n;
}

inline std::size_t brute_centralizer_order(const Group& G, const Subgroup& H) {
  std::size_t n = 0;
  for (Elem g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem h : H.elements()) {
      if (G.mul(g, h) != G.mul(h, g)) {
        ok = false;
        break;
      }
    }
    n += ok;
  }
  return n;
}

inline bool brute_is_normal(const Group& G, const ElementSet& s) {
  for (Elem x : s.to_vector()) {
    for (Elem g = 0; g < G.order(); ++g) {
      if (!s.test(G.conj(x, g))) return false;
    }
  }
  return true;
}

// Layered-free definition: the join of every normal N all of whose
// lattice cover pairs below N have prime order.
inline Subgroup brute_u_hypercentre(const Group& G) {
  const auto& L = normal_lattice(G);
  Subgroup acc = Subgroup::trivial(G);
  for (NodeId n = 0; n < L.size(); ++n) {
    bool ok = true;
    for (NodeId k = 0; k < L.size() && ok; ++k) {
      if (!L.contains(n, k)) continue;
      for (NodeId l : L.covers_above(k)) {
        if (!L.contains(n, l)) continue;
        if (!is_prime(L.node(l).order() / L.node(k).order())) {
          ok = false;
          break;
        }
      }
    }
    if (ok) acc = join(acc, L.node(n));
  }
  return acc;
}

inline std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

struct PoolItem {
  Subgroup H;
  std::uint64_t p;
};

// Sylow subgroups, their maximal subgroups, and cyclic subgroups of order
// p (and 4 for p = 2), without duplicates.
inline std::vector<PoolItem> subgroup_pool(const Group& G) {
  std::vector<PoolItem> out;
  for (auto p : prime_divisors(G.order())) {
    const auto P = sylow(G, p);
    std::vector<Subgroup> cand{P};
    for (auto& M : p_group_maximal_subgroups(P, p)) cand.push_back(M);
    for (auto& C : cyclic_subgroups_of_order(P, p, p)) cand.push_back(C);
    if (p == 2) {
      for (auto& C : cyclic_subgroups_of_order(P, 2, 4)) cand.push_back(C);
    }
    std::vector<Subgroup> kept;
    for (auto& H : cand) {
      if (std::find(kept.begin(), kept.end(), H) == kept.end()) kept.push_back(H);
    }
    for (auto& H : kept) out.push_back({H, p});
  }
  return out;
}

// Re-checks a chief-series witness for the partial S-Pi-property by
// forming each quotient G/K explicitly.
inline bool witness_valid_by_quotients(const Group& G, const Subgroup& H, std::uint64_t p,
                                       const std::vector<NodeId>& chain) {
  const auto& L = normal_lattice(G);
  if (chain.empty() || chain.front() != L.bottom() || chain.back() != L.top()) return false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!L.is_cover(chain[i], chain[i + 1])) return false;
    const Subgroup& K = L.node(chain[i]);
    const Subgroup& U = L.node(chain[i + 1]);
    const auto q = quotient(G, K);
    const Group& Q = *q.image;
    const auto X = q.image_of(intersect(H, U));
    const auto F = q.image_of(U);
    const bool sylow_in_factor = X.order() == p_part(F.order(), p);
    const bool p_index = is_p_number(Q.order() / normalizer(Q, X).order(), p);
    if (!sylow_in_factor && !p_index) return false;
  }
  return true;
}

}  // namespace testing
