#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chieflab/element_set.hpp"
#include "chieflab/group.hpp"

namespace chieflab {

/// A subgroup of a parent group, stored as a bit set over the parent's
/// element table together with a small generating set.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup trivial(const Group& G);
  static Subgroup whole(const Group& G);
  /// `members` must already be closed; the generating set is recovered
  /// greedily. Throws std::invalid_argument if the set is not a subgroup.
  static Subgroup from_members(const Group& G, const ElementSet& members);
  /// Unchecked: `members` must be exactly the span of `gens`.
  static Subgroup from_parts(const Group& G, ElementSet members, std::vector<Elem> gens);

  const Group& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const noexcept { return parent_; }
  const ElementSet& members() const noexcept { return members_; }
  const std::vector<Elem>& generators() const noexcept { return gens_; }
  std::size_t order() const noexcept { return order_; }
  bool contains(Elem x) const { return members_.test(x); }
  bool is_trivial() const noexcept { return order_ == 1; }
  std::vector<Elem> elements() const { return members_.to_vector(); }

  bool is_subgroup_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  ElementSet members_;
  std::vector<Elem> gens_;
  std::size_t order_ = 0;
};

/// Smallest subgroup containing `seed`.
Subgroup span(const Group& G, std::span<const Elem> seed);
Subgroup span(const Group& G, std::initializer_list<Elem> seed);
/// <A, B>
Subgroup join(const Subgroup& A, const Subgroup& B);
Subgroup intersect(const Subgroup& A, const Subgroup& B);

struct ProductSet {
  ElementSet elements;
  std::size_t size = 0;
  bool is_subgroup = false;
};

/// The set {ab : a in A, b in B}.
ProductSet product(const Subgroup& A, const Subgroup& B);

bool is_normalized_by(const Subgroup& H, Elem g);
bool is_normal_in(const Subgroup& H, const Subgroup& over);
bool is_normal(const Subgroup& H);

Subgroup normalizer(const Subgroup& over, const Subgroup& H);
Subgroup normalizer(const Group& G, const Subgroup& H);
Subgroup centralizer(const Subgroup& over, const Subgroup& H);
Subgroup centralizer(const Group& G, const Subgroup& H);
Subgroup center(const Subgroup& H);
Subgroup center(const Group& G);

/// Smallest subgroup of `over` containing `seed` and normalized by `over`.
Subgroup normal_closure_in(const Subgroup& over, std::span<const Elem> seed);
/// [A, B] for A, B normalized by `over` (generated by commutators of generators).
Subgroup commutator_subgroup(const Subgroup& over, const Subgroup& A, const Subgroup& B);
Subgroup derived_subgroup(const Subgroup& H);
Subgroup derived_subgroup(const Group& G);
/// gamma_1 = H > gamma_2 = [H, H] > ... up to the first repeated term.
std::vector<Subgroup> lower_central_series(const Subgroup& H);
std::vector<Subgroup> lower_central_series(const Group& G);
std::vector<Subgroup> derived_series(const Subgroup& H);
std::size_t exponent(const Subgroup& H);
bool is_abelian(const Subgroup& H);
bool is_cyclic(const Subgroup& H);

std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_prime(std::uint64_t n);
/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// True iff every prime divisor of n lies in `primes`; 1 qualifies for any set.
bool is_pi_number(std::uint64_t n, std::span<const std::uint64_t> primes);
bool is_p_number(std::uint64_t n, std::uint64_t p);
/// Returns p if n = p^k with k >= 1; 0 otherwise.
std::uint64_t prime_power_base(std::uint64_t n);
bool is_p_group(const Subgroup& H, std::uint64_t p);

/// Phi(P) = P' P^p for a p-group P.
Subgroup frattini_p(const Subgroup& P, std::uint64_t p);
/// All index-p subgroups of the p-group P, as hyperplanes over Phi(P).
std::vector<Subgroup> p_group_maximal_subgroups(const Subgroup& P, std::uint64_t p);
/// Omega_1(P), or Omega_2(P) when P is a non-abelian 2-group.
Subgroup omega(const Subgroup& P, std::uint64_t p);
/// Distinct <x> over elements of P of order exactly m.
std::vector<Subgroup> cyclic_subgroups_of_order(const Subgroup& P, std::uint64_t p, std::uint64_t m);

}  // namespace chieflab
