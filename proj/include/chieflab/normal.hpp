#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chieflab/group.hpp"
#include "chieflab/subgroup.hpp"

namespace chieflab {

using NodeId = std::size_t;

/// All normal subgroups of a group, with the covering relation.
///
/// Nodes are sorted by order (ties broken by membership bits), so node 0
/// is the trivial subgroup and the last node is the whole group.
class NormalLattice {
 public:
  static constexpr std::size_t kDefaultNodeLimit = 4096;

  NormalLattice(std::vector<Subgroup> nodes);

  std::size_t size() const noexcept { return nodes_.size(); }
  const Subgroup& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<Subgroup>& nodes() const noexcept { return nodes_; }
  NodeId bottom() const noexcept { return 0; }
  NodeId top() const noexcept { return nodes_.size() - 1; }

  std::optional<NodeId> find(const Subgroup& H) const;
  /// Node id of a subgroup known to be normal; throws std::invalid_argument otherwise.
  NodeId id_of(const Subgroup& H) const;

  /// Covers K < L with no normal subgroup strictly between.
  const std::vector<NodeId>& covers_above(NodeId k) const { return up_.at(k); }
  const std::vector<NodeId>& covered_by(NodeId l) const { return down_.at(l); }
  bool is_cover(NodeId k, NodeId l) const;
  /// Node a is contained in node b (not necessarily strictly).
  bool contains(NodeId outer, NodeId inner) const;

  std::size_t cover_count() const noexcept { return cover_count_; }

 private:
  std::vector<Subgroup> nodes_;
  std::vector<std::vector<NodeId>> up_;
  std::vector<std::vector<NodeId>> down_;
  std::vector<std::vector<std::uint64_t>> below_;  // strict containment, bit-indexed by node
  std::size_t cover_count_ = 0;
};

/// A maximal chain of the lattice from the trivial node to the top.
struct ChiefSeries {
  std::vector<NodeId> chain;
  std::vector<std::size_t> factor_orders;
};

/// Image of a group under the natural map onto G/N, realized as the
/// permutation action on right cosets of N.
struct QuotientMap {
  GroupPtr source;
  Subgroup kernel;
  GroupPtr image;
  std::vector<Elem> element_map;

  Subgroup image_of(const Subgroup& H) const;
  Subgroup preimage(const Subgroup& S) const;
};

/// A subgroup re-enumerated as a group in its own right.
struct SubgroupEmbedding {
  Subgroup in_parent;
  GroupPtr group;
  std::vector<Elem> to_parent;
  std::vector<Elem> from_parent;  // kNotMember outside the subgroup

  static constexpr Elem kNotMember = ~Elem{0};

  /// H must lie in the embedded subgroup.
  Subgroup to_local(const Subgroup& H) const;
  Subgroup to_parent_subgroup(const Subgroup& local) const;
};

Subgroup normal_closure(const Group& G, std::span<const Elem> seed);

/// Cached per group. Throws ResourceCapError past `node_limit` nodes.
const NormalLattice& normal_lattice(const Group& G, std::size_t node_limit = NormalLattice::kDefaultNodeLimit);

std::vector<Subgroup> minimal_normals(const Group& G);
Subgroup socle(const Group& G);

/// Every chief series, depth first. Throws ResourceCapError past `limit`.
std::vector<ChiefSeries> chief_series_enumerate(const Group& G, std::size_t limit);
/// The lexicographically first chief series.
ChiefSeries first_chief_series(const Group& G);

QuotientMap quotient(const Group& G, const Subgroup& N);
SubgroupEmbedding as_group(const Subgroup& H);

bool is_chief_factor(const Group& G, const Subgroup& K, const Subgroup& L);

}  // namespace chieflab
