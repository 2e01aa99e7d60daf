#include "chieflab/classify.hpp"

#include <stdexcept>
#include <string>

namespace chieflab {

Subgroup sylow(const Subgroup& H, std::uint64_t p) {
  const Group& G = H.parent();
  const std::uint64_t target = p_part(H.order(), p);
  Subgroup P = Subgroup::trivial(G);
  if (target == 1) return P;
  const auto& orders = G.element_orders();
  while (P.order() < target) {
    const Subgroup N = P.is_trivial() ? H : normalizer(H, P);
    bool extended = false;
    for (Elem y : N.elements()) {
      if (!P.contains(y) && is_p_number(orders[y], p)) {
        std::vector<Elem> seed = P.generators();
        seed.push_back(y);
        P = span(G, seed);
        extended = true;
        break;
      }
    }
    if (!extended) throw std::logic_error("Sylow extension found no p-element in the normalizer");
  }
  if (P.order() != target) throw std::logic_error("Sylow subgroup has the wrong order");
  return P;
}

Subgroup sylow(const Group& G, std::uint64_t p) {
  return G.memo<Subgroup>("sylow:" + std::to_string(p), [&] { return sylow(Subgroup::whole(G), p); });
}

const std::vector<Subgroup>& sylow_subgroups(const Group& G, std::uint64_t p) {
  return G.memo<std::vector<Subgroup>>("sylows:" + std::to_string(p), [&] {
    const Subgroup P = sylow(G, p);
    std::vector<Subgroup> out{P};
    if (P.is_trivial()) return out;
    const Subgroup N = normalizer(G, P);
    ElementSet done = N.members();  // elements already used as conjugators, up to N
    for (Elem g = 0; g < G.order(); ++g) {
      if (done.test(g)) continue;
      std::vector<Elem> seed;
      for (Elem x : P.generators()) seed.push_back(G.conj(x, g));
      Subgroup Q = span(G, seed);
      bool fresh = true;
      for (const auto& S : out) {
        if (S.members() == Q.members()) {
          fresh = false;
          break;
        }
      }
      // Every element of the coset N g conjugates P to the same Q.
      for (Elem n : N.elements()) done.set(G.mul(n, g));
      if (fresh) out.push_back(std::move(Q));
    }
    return out;
  });
}

namespace {

NodeId node_of(const Group& G, const Subgroup& E) { return normal_lattice(G).id_of(E); }

}  // namespace

Subgroup radical_p_in(const Group& G, const Subgroup& E, std::uint64_t p) {
  const auto& lattice = normal_lattice(G);
  const NodeId e = node_of(G, E);
  for (NodeId id = e + 1; id-- > 0;) {
    if (lattice.contains(e, id) && is_p_number(lattice.node(id).order(), p)) return lattice.node(id);
  }
  return lattice.node(lattice.bottom());
}

Subgroup radical_p_prime_in(const Group& G, const Subgroup& E, std::uint64_t p) {
  const auto& lattice = normal_lattice(G);
  const NodeId e = node_of(G, E);
  for (NodeId id = e + 1; id-- > 0;) {
    if (lattice.contains(e, id) && lattice.node(id).order() % p != 0) return lattice.node(id);
  }
  return lattice.node(lattice.bottom());
}

Subgroup fitting_in(const Group& G, const Subgroup& E) {
  Subgroup F = Subgroup::trivial(G);
  for (std::uint64_t p : prime_divisors(E.order())) F = join(F, radical_p_in(G, E, p));
  return F;
}

Subgroup fitting_p_in(const Group& G, const Subgroup& E, std::uint64_t p) {
  const auto& lattice = normal_lattice(G);
  const NodeId e = node_of(G, E);
  const NodeId o = lattice.id_of(radical_p_prime_in(G, E, p));
  for (NodeId id = e + 1; id-- > 0;) {
    if (lattice.contains(e, id) && lattice.contains(id, o) &&
        is_p_number(lattice.node(id).order() / lattice.node(o).order(), p)) {
      return lattice.node(id);
    }
  }
  return lattice.node(o);
}

Subgroup radical_p(const Group& G, std::uint64_t p) { return radical_p_in(G, Subgroup::whole(G), p); }
Subgroup radical_p_prime(const Group& G, std::uint64_t p) { return radical_p_prime_in(G, Subgroup::whole(G), p); }
Subgroup fitting(const Group& G) { return fitting_in(G, Subgroup::whole(G)); }
Subgroup fitting_p(const Group& G, std::uint64_t p) { return fitting_p_in(G, Subgroup::whole(G), p); }

std::vector<std::size_t> chief_factor_orders_below(const Group& G, const Subgroup& E) {
  const auto& lattice = normal_lattice(G);
  const NodeId e = node_of(G, E);
  std::vector<std::size_t> orders;
  NodeId here = lattice.bottom();
  while (here != e) {
    NodeId next = here;
    for (NodeId up : lattice.covers_above(here)) {
      if (lattice.contains(e, up)) {
        next = up;
        break;
      }
    }
    if (next == here) throw std::logic_error("no cover inside the target normal subgroup");
    orders.push_back(lattice.node(next).order() / lattice.node(here).order());
    here = next;
  }
  return orders;
}

bool is_p_nilpotent_in(const Group& G, const Subgroup& E, std::uint64_t p) {
  return radical_p_prime_in(G, E, p).order() * p_part(E.order(), p) == E.order();
}

bool is_p_soluble_in(const Group& G, const Subgroup& E, std::uint64_t p) {
  for (std::size_t f : chief_factor_orders_below(G, E)) {
    if (!is_p_number(f, p) && f % p == 0) return false;
  }
  return true;
}

bool is_p_nilpotent(const Group& G, std::uint64_t p) { return is_p_nilpotent_in(G, Subgroup::whole(G), p); }
bool is_p_soluble(const Group& G, std::uint64_t p) { return is_p_soluble_in(G, Subgroup::whole(G), p); }

bool is_soluble_by_chief_factors(const Group& G) {
  const auto& lattice = normal_lattice(G);
  const ChiefSeries series = first_chief_series(G);
  for (std::size_t i = 1; i < series.chain.size(); ++i) {
    if (prime_power_base(series.factor_orders[i - 1]) == 0) return false;
    const Subgroup& K = lattice.node(series.chain[i - 1]);
    const Subgroup& L = lattice.node(series.chain[i]);
    for (Elem a : L.generators()) {
      for (Elem b : L.generators()) {
        if (!K.contains(G.commutator(a, b))) return false;
      }
    }
  }
  return true;
}

bool is_soluble_by_derived_series(const Group& G) { return derived_series(Subgroup::whole(G)).back().is_trivial(); }

bool is_soluble(const Group& G) {
  const bool by_factors = is_soluble_by_chief_factors(G);
  if (by_factors != is_soluble_by_derived_series(G)) {
    throw std::logic_error("solubility routes disagree");
  }
  return by_factors;
}

bool is_nilpotent(const Group& G) {
  for (std::uint64_t p : prime_divisors(G.order())) {
    if (!is_normal(sylow(G, p))) return false;
  }
  return true;
}

bool is_abelian(const Group& G) { return G.is_abelian(); }

bool is_supersoluble(const Group& G) {
  for (std::size_t f : first_chief_series(G).factor_orders) {
    if (!is_prime(f)) return false;
  }
  return true;
}

bool is_p_supersoluble(const Group& G, std::uint64_t p) {
  if (!is_p_soluble(G, p)) return false;
  for (std::size_t f : first_chief_series(G).factor_orders) {
    if (f % p == 0 && f != p) return false;
  }
  return true;
}

Subgroup hypercentre(const Group& G) {
  Subgroup Z = Subgroup::trivial(G);
  for (;;) {
    ElementSet next = G.empty_set();
    for (Elem g = 0; g < G.order(); ++g) {
      bool central = true;
      for (Elem s : G.generator_indices()) {
        if (!Z.contains(G.commutator(g, s))) {
          central = false;
          break;
        }
      }
      if (central) next.set(g);
    }
    if (next == Z.members()) return Z;
    Z = Subgroup::from_members(G, next);
  }
}

Subgroup u_hypercentre(const Group& G) {
  return G.memo<Subgroup>("u_hypercentre", [&] {
    const auto& lattice = normal_lattice(G);
    NodeId z = lattice.bottom();
    for (;;) {
      Subgroup next = lattice.node(z);
      for (NodeId up : lattice.covers_above(z)) {
        if (is_prime(lattice.node(up).order() / lattice.node(z).order())) next = join(next, lattice.node(up));
      }
      if (next.order() == lattice.node(z).order()) return next;
      z = lattice.id_of(next);
    }
  });
}

Subgroup nilpotent_residual(const Group& G) { return lower_central_series(G).back(); }

Subgroup f_star(const Group& G) {
  return G.memo<Subgroup>("f_star", [&] {
    if (nilpotent_residual(G).is_trivial()) return Subgroup::whole(G);
    const Subgroup F = fitting(G);
    const Subgroup FC = join(F, centralizer(G, F));
    const QuotientMap q = quotient(G, F);
    const SubgroupEmbedding image = as_group(q.image_of(FC));
    const Subgroup soc = image.to_parent_subgroup(socle(*image.group));
    return q.preimage(soc);
  });
}

ClassReport class_report(const Group& G) {
  ClassReport r;
  r.order = G.order();
  r.abelian = is_abelian(G);
  r.nilpotent = is_nilpotent(G);
  r.soluble = is_soluble(G);
  r.supersoluble = is_supersoluble(G);
  r.center = center(G);
  r.hypercentre = hypercentre(G);
  r.u_hypercentre = u_hypercentre(G);
  r.fitting = fitting(G);
  r.f_star = f_star(G);
  r.nilpotent_residual = nilpotent_residual(G);
  r.derived = derived_subgroup(G);
  for (std::uint64_t p : prime_divisors(G.order())) {
    PrimeReport pr;
    pr.p = p;
    pr.p_soluble = is_p_soluble(G, p);
    pr.p_supersoluble = is_p_supersoluble(G, p);
    pr.p_nilpotent = is_p_nilpotent(G, p);
    pr.sylow = sylow(G, p);
    pr.o_p = radical_p(G, p);
    pr.o_p_prime = radical_p_prime(G, p);
    pr.fitting_p = fitting_p(G, p);
    r.primes.push_back(std::move(pr));
  }
  return r;
}

}  // namespace chieflab
