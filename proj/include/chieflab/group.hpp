#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chieflab/element_set.hpp"
#include "chieflab/perm.hpp"

namespace chieflab {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A fully enumerated permutation group.
///
/// Elements are numbered in breadth-first discovery order starting from
/// the identity at index 0, so indices are reproducible for a given
/// generator list. The object is immutable after construction; the lazily
/// filled caches (element orders, conjugacy classes, memoized analyses)
/// are filled idempotently and are safe under concurrent readers.
class Group : public std::enable_shared_from_this<Group> {
  struct Token {};

 public:
  static constexpr std::size_t kDefaultCap = 10000;
  /// Groups up to this order get a full multiplication table.
  static constexpr std::size_t kTableLimit = 2048;

  /// Closure of `gens` under composition. Throws ResourceCapError once
  /// more than `cap` elements have been discovered.
  static GroupPtr generate(const std::vector<Permutation>& gens, std::size_t degree,
                           std::size_t cap = kDefaultCap);

  Group(Token, std::size_t degree, std::vector<Permutation> gens);

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  static constexpr Elem identity() noexcept { return 0; }

  const Permutation& element(Elem x) const { return elements_.at(x); }
  std::optional<Elem> index_of(const Permutation& p) const;

  std::size_t generator_count() const noexcept { return generators_.size(); }
  const std::vector<Permutation>& generator_perms() const noexcept { return generators_; }
  Elem generator(std::size_t i) const { return generator_index_[i]; }
  const std::vector<Elem>& generator_indices() const noexcept { return generator_index_; }

  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const { return inverse_[a]; }
  /// g^-1 x g
  Elem conj(Elem x, Elem g) const { return mul(mul(inverse_[g], x), g); }
  /// a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const { return mul(mul(inverse_[a], inverse_[b]), mul(a, b)); }
  Elem pow(Elem x, long long k) const;
  /// x times generator number `gen`.
  Elem right(Elem x, std::size_t gen) const { return right_[x * generators_.size() + gen]; }

  /// Breadth-first tree: x = right(parent(x), via(x)) for x != identity.
  Elem bfs_parent(Elem x) const { return parent_[x]; }
  std::size_t bfs_via(Elem x) const { return via_[x]; }

  std::size_t element_order(Elem x) const;
  const std::vector<std::size_t>& element_orders() const;

  /// Orbits of conjugation, ordered by smallest member; each class sorted.
  const std::vector<std::vector<Elem>>& conjugacy_classes() const;

  ElementSet empty_set() const { return ElementSet(order()); }
  ElementSet full_set() const;

  bool is_abelian() const;

  /// Per-group memo slot. `make` runs outside the lock; a concurrent
  /// duplicate computation is discarded in favour of the first stored value.
  template <class T, class Make>
  const T& memo(const std::string& key, Make&& make) const {
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return *static_cast<const T*>(it->second.get());
    }
    std::shared_ptr<const void> value = std::make_shared<const T>(make());
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.emplace(key, std::move(value)).first;
    return *static_cast<const T*>(it->second.get());
  }

 private:
  void enumerate(std::size_t cap);
  void build_tables();

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Elem> generator_index_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Elem, PermutationHash> index_;
  std::vector<Elem> right_;
  std::vector<Elem> parent_;
  std::vector<std::size_t> via_;
  std::vector<Elem> inverse_;
  std::vector<Elem> table_;  // empty when order() > kTableLimit

  mutable std::once_flag orders_once_;
  mutable std::vector<std::size_t> orders_;
  mutable std::once_flag classes_once_;
  mutable std::vector<std::vector<Elem>> classes_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::string, std::shared_ptr<const void>> memo_;
};

}  // namespace chieflab
