#include "chieflab/subgroup.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace chieflab {

namespace {

// Incremental closure (Dimino): the element list is always a union of right
// cosets of the previous stage, and each new generator adds whole cosets.
class Closure {
 public:
  explicit Closure(const Group& G) : G_(G), bits_(G.order()), elems_{0} { bits_.set(0); }

  Closure(const Group& G, const Subgroup& start)
      : G_(G), bits_(start.members()), elems_(start.elements()), gens_(start.generators()) {}

  bool contains(Elem x) const { return bits_.test(x); }

  void add(Elem s) {
    if (bits_.test(s)) return;
    gens_.push_back(s);
    const std::vector<Elem> previous = elems_;
    std::vector<Elem> reps{0};
    auto add_coset = [&](Elem r) {
      for (Elem h : previous) {
        Elem e = G_.mul(h, r);
        bits_.set(e);
        elems_.push_back(e);
      }
      reps.push_back(r);
    };
    add_coset(s);
    for (std::size_t i = 1; i < reps.size(); ++i) {
      for (std::size_t j = 0; j < gens_.size(); ++j) {
        Elem e = G_.mul(reps[i], gens_[j]);
        if (!bits_.test(e)) add_coset(e);
      }
    }
  }

  const ElementSet& bits() const { return bits_; }
  const std::vector<Elem>& gens() const { return gens_; }
  std::size_t size() const { return elems_.size(); }

 private:
  const Group& G_;
  ElementSet bits_;
  std::vector<Elem> elems_;
  std::vector<Elem> gens_;
};

Subgroup finish(const Group& G, const Closure& c) { return Subgroup::from_parts(G, c.bits(), c.gens()); }

void require_same_parent(const Subgroup& A, const Subgroup& B) {
  if (A.parent_ptr() != B.parent_ptr()) throw std::invalid_argument("subgroups of different parent groups");
}

}  // namespace

Subgroup span(const Group& G, std::span<const Elem> seed) {
  Closure c(G);
  for (Elem s : seed) {
    if (s >= G.order()) throw std::out_of_range("element index out of range");
    c.add(s);
  }
  return finish(G, c);
}

Subgroup Subgroup::from_parts(const Group& G, ElementSet members, std::vector<Elem> gens) {
  Subgroup H;
  H.parent_ = G.shared_from_this();
  H.order_ = members.count();
  H.members_ = std::move(members);
  H.gens_ = std::move(gens);
  return H;
}

Subgroup span(const Group& G, std::initializer_list<Elem> seed) {
  return span(G, std::span<const Elem>(seed.begin(), seed.size()));
}

Subgroup Subgroup::trivial(const Group& G) { return span(G, std::span<const Elem>{}); }

Subgroup Subgroup::whole(const Group& G) {
  return G.memo<Subgroup>("subgroup:whole", [&] { return span(G, G.generator_indices()); });
}

Subgroup Subgroup::from_members(const Group& G, const ElementSet& members) {
  if (members.universe() != G.order()) throw std::invalid_argument("element set of the wrong size");
  Closure c(G);
  for (Elem x : members.to_vector()) c.add(x);
  if (c.bits() != members) throw std::invalid_argument("element set is not a subgroup");
  return finish(G, c);
}

Subgroup join(const Subgroup& A, const Subgroup& B) {
  require_same_parent(A, B);
  if (B.is_subgroup_of(A)) return A;
  if (A.is_subgroup_of(B)) return B;
  Closure c(A.parent(), A);
  for (Elem g : B.generators()) c.add(g);
  return finish(A.parent(), c);
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
  require_same_parent(A, B);
  if (A.is_subgroup_of(B)) return A;
  if (B.is_subgroup_of(A)) return B;
  return Subgroup::from_members(A.parent(), A.members() & B.members());
}

ProductSet product(const Subgroup& A, const Subgroup& B) {
  require_same_parent(A, B);
  const Group& G = A.parent();
  ProductSet out;
  out.elements = G.empty_set();
  const auto b_elems = B.elements();
  for (Elem a : A.elements()) {
    for (Elem b : b_elems) out.elements.set(G.mul(a, b));
  }
  out.size = out.elements.count();
  const std::size_t expected = A.order() * B.order() / intersect(A, B).order();
  if (out.size != expected) throw std::logic_error("product formula |AB| = |A||B|/|A^B| violated");
  out.is_subgroup = out.size == join(A, B).order();
  return out;
}

bool is_normalized_by(const Subgroup& H, Elem g) {
  const Group& G = H.parent();
  for (Elem h : H.generators()) {
    if (!H.contains(G.conj(h, g))) return false;
  }
  return true;
}

bool is_normal_in(const Subgroup& H, const Subgroup& over) {
  for (Elem g : over.generators()) {
    if (!is_normalized_by(H, g)) return false;
  }
  return true;
}

bool is_normal(const Subgroup& H) {
  for (Elem g : H.parent().generator_indices()) {
    if (!is_normalized_by(H, g)) return false;
  }
  return true;
}

Subgroup normalizer(const Subgroup& over, const Subgroup& H) {
  require_same_parent(over, H);
  const Group& G = over.parent();
  ElementSet bits = G.empty_set();
  for (Elem g : over.elements()) {
    if (is_normalized_by(H, g)) bits.set(g);
  }
  return Subgroup::from_members(G, bits);
}

Subgroup normalizer(const Group& G, const Subgroup& H) { return normalizer(Subgroup::whole(G), H); }

Subgroup centralizer(const Subgroup& over, const Subgroup& H) {
  require_same_parent(over, H);
  const Group& G = over.parent();
  ElementSet bits = G.empty_set();
  for (Elem g : over.elements()) {
    bool commutes = true;
    for (Elem h : H.generators()) {
      if (G.mul(g, h) != G.mul(h, g)) {
        commutes = false;
        break;
      }
    }
    if (commutes) bits.set(g);
  }
  return Subgroup::from_members(G, bits);
}

Subgroup centralizer(const Group& G, const Subgroup& H) { return centralizer(Subgroup::whole(G), H); }
Subgroup center(const Subgroup& H) { return centralizer(H, H); }
Subgroup center(const Group& G) { return center(Subgroup::whole(G)); }

Subgroup normal_closure_in(const Subgroup& over, std::span<const Elem> seed) {
  const Group& G = over.parent();
  Closure c(G);
  for (Elem s : seed) c.add(s);
  for (std::size_t i = 0; i < c.gens().size(); ++i) {
    for (Elem g : over.generators()) c.add(G.conj(c.gens()[i], g));
  }
  return finish(G, c);
}

Subgroup commutator_subgroup(const Subgroup& over, const Subgroup& A, const Subgroup& B) {
  const Group& G = over.parent();
  std::vector<Elem> seed;
  for (Elem a : A.generators()) {
    for (Elem b : B.generators()) seed.push_back(G.commutator(a, b));
  }
  return normal_closure_in(over, seed);
}

Subgroup derived_subgroup(const Subgroup& H) { return commutator_subgroup(H, H, H); }
Subgroup derived_subgroup(const Group& G) { return derived_subgroup(Subgroup::whole(G)); }

std::vector<Subgroup> lower_central_series(const Subgroup& H) {
  std::vector<Subgroup> series{H};
  for (;;) {
    Subgroup next = commutator_subgroup(H, series.back(), H);
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> lower_central_series(const Group& G) { return lower_central_series(Subgroup::whole(G)); }

std::vector<Subgroup> derived_series(const Subgroup& H) {
  std::vector<Subgroup> series{H};
  for (;;) {
    Subgroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::size_t exponent(const Subgroup& H) {
  const auto& orders = H.parent().element_orders();
  std::size_t e = 1;
  for (Elem x : H.elements()) e = std::lcm(e, orders[x]);
  return e;
}

bool is_abelian(const Subgroup& H) {
  const Group& G = H.parent();
  for (Elem a : H.generators()) {
    for (Elem b : H.generators()) {
      if (G.mul(a, b) != G.mul(b, a)) return false;
    }
  }
  return true;
}

bool is_cyclic(const Subgroup& H) {
  const auto& orders = H.parent().element_orders();
  for (Elem x : H.elements()) {
    if (orders[x] == H.order()) return true;
  }
  return false;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("p_part of zero");
  std::uint64_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_pi_number(std::uint64_t n, std::span<const std::uint64_t> primes) {
  if (n == 0) throw std::invalid_argument("is_pi_number of zero");
  for (std::uint64_t q : primes) {
    while (n % q == 0) n /= q;
  }
  return n == 1;
}

bool is_p_number(std::uint64_t n, std::uint64_t p) { return is_pi_number(n, std::span<const std::uint64_t>(&p, 1)); }

std::uint64_t prime_power_base(std::uint64_t n) {
  auto primes = prime_divisors(n);
  return primes.size() == 1 ? primes.front() : 0;
}

bool is_p_group(const Subgroup& H, std::uint64_t p) { return is_p_number(H.order(), p); }

namespace {

void require_p_group(const Subgroup& P, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (!is_p_group(P, p)) {
    throw std::invalid_argument("subgroup of order " + std::to_string(P.order()) + " is not a " +
                                std::to_string(p) + "-group");
  }
}

}  // namespace

Subgroup frattini_p(const Subgroup& P, std::uint64_t p) {
  require_p_group(P, p);
  const Group& G = P.parent();
  Closure c(G, derived_subgroup(P));
  for (Elem x : P.elements()) c.add(G.pow(x, static_cast<long long>(p)));
  return finish(G, c);
}

std::vector<Subgroup> p_group_maximal_subgroups(const Subgroup& P, std::uint64_t p) {
  const Subgroup phi = frattini_p(P, p);
  const Group& G = P.parent();

  // Basis of P/Phi(P) as coset representatives.
  std::vector<Elem> basis;
  {
    Closure c(G, phi);
    for (Elem x : P.elements()) {
      if (!c.contains(x)) {
        basis.push_back(x);
        c.add(x);
      }
    }
  }
  const std::size_t d = basis.size();

  std::vector<Subgroup> out;
  // A hyperplane is the kernel of a functional f with leading coefficient 1.
  for (std::size_t lead = 0; lead < d; ++lead) {
    const std::size_t free = d - lead - 1;
    std::size_t combos = 1;
    for (std::size_t k = 0; k < free; ++k) combos *= p;
    for (std::size_t code = 0; code < combos; ++code) {
      Closure c(G, phi);
      for (std::size_t j = 0; j < lead; ++j) c.add(basis[j]);
      std::size_t rest = code;
      for (std::size_t j = lead + 1; j < d; ++j) {
        const auto coeff = static_cast<long long>(rest % p);
        rest /= p;
        c.add(G.mul(basis[j], G.pow(basis[lead], -coeff)));
      }
      Subgroup M = finish(G, c);
      if (M.order() * p != P.order()) throw std::logic_error("hyperplane subgroup has the wrong index");
      out.push_back(std::move(M));
    }
  }
  return out;
}

Subgroup omega(const Subgroup& P, std::uint64_t p) {
  require_p_group(P, p);
  const std::uint64_t bound = (p == 2 && !is_abelian(P)) ? 4 : p;
  const auto& orders = P.parent().element_orders();
  std::vector<Elem> seed;
  for (Elem x : P.elements()) {
    if (bound % orders[x] == 0) seed.push_back(x);
  }
  return span(P.parent(), seed);
}

std::vector<Subgroup> cyclic_subgroups_of_order(const Subgroup& P, std::uint64_t p, std::uint64_t m) {
  require_p_group(P, p);
  if (m == 4 && p != 2) throw std::invalid_argument("order-4 cyclic subgroups requested for odd p");
  if (m != p && m != 4) throw std::invalid_argument("cyclic subgroup order must be p or 4");
  const Group& G = P.parent();
  const auto& orders = G.element_orders();
  std::vector<Subgroup> out;
  ElementSet covered = G.empty_set();
  for (Elem x : P.elements()) {
    if (orders[x] != m || covered.test(x)) continue;
    Subgroup C = span(G, {x});
    for (Elem y : C.elements()) {
      if (orders[y] == m) covered.set(y);
    }
    out.push_back(std::move(C));
  }
  return out;
}

}  // namespace chieflab
