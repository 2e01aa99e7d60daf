#include "chieflab/normal.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "chieflab/errors.hpp"

namespace chieflab {

namespace {

using NodeBits = std::vector<std::uint64_t>;

bool test_bit(const NodeBits& bits, std::size_t i) { return (bits[i >> 6] >> (i & 63)) & 1u; }
void set_bit(NodeBits& bits, std::size_t i) { bits[i >> 6] |= std::uint64_t{1} << (i & 63); }

}  // namespace

NormalLattice::NormalLattice(std::vector<Subgroup> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  const std::size_t n = nodes_.size();
  const std::size_t words = (n + 63) / 64;
  below_.assign(n, NodeBits(words, 0));
  std::vector<NodeBits> above(n, NodeBits(words, 0));
  for (NodeId j = 0; j < n; ++j) {
    for (NodeId i = 0; i < j; ++i) {
      if (nodes_[i].order() < nodes_[j].order() && nodes_[i].is_subgroup_of(nodes_[j])) {
        set_bit(below_[j], i);
        set_bit(above[i], j);
      }
    }
  }
  up_.assign(n, {});
  down_.assign(n, {});
  for (NodeId j = 0; j < n; ++j) {
    for (NodeId i = 0; i < j; ++i) {
      if (!test_bit(below_[j], i)) continue;
      bool empty_interval = true;
      for (std::size_t w = 0; w < words; ++w) {
        if (above[i][w] & below_[j][w]) {
          empty_interval = false;
          break;
        }
      }
      if (empty_interval) {
        up_[i].push_back(j);
        down_[j].push_back(i);
        ++cover_count_;
      }
    }
  }
}

std::optional<NodeId> NormalLattice::find(const Subgroup& H) const {
  for (NodeId i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].order() == H.order() && nodes_[i].members() == H.members()) return i;
  }
  return std::nullopt;
}

NodeId NormalLattice::id_of(const Subgroup& H) const {
  auto id = find(H);
  if (!id) throw std::invalid_argument("subgroup of order " + std::to_string(H.order()) + " is not normal");
  return *id;
}

bool NormalLattice::is_cover(NodeId k, NodeId l) const {
  const auto& up = up_.at(k);
  return std::find(up.begin(), up.end(), l) != up.end();
}

bool NormalLattice::contains(NodeId outer, NodeId inner) const {
  return outer == inner || test_bit(below_.at(outer), inner);
}

Subgroup normal_closure(const Group& G, std::span<const Elem> seed) {
  return normal_closure_in(Subgroup::whole(G), seed);
}

namespace {

NormalLattice build_lattice(const Group& G, std::size_t node_limit) {
  std::vector<Subgroup> nodes{Subgroup::trivial(G)};
  std::unordered_map<ElementSet, NodeId, ElementSetHash> seen{{nodes[0].members(), 0}};

  auto admit = [&](Subgroup N) -> bool {
    if (seen.count(N.members())) return false;
    if (nodes.size() >= node_limit) {
      throw ResourceCapError("normal lattice exceeds " + std::to_string(node_limit) + " nodes",
                             nodes.size() + 1);
    }
    seen.emplace(N.members(), nodes.size());
    nodes.push_back(std::move(N));
    return true;
  };

  // A conjugacy class spans a normal subgroup: the normal closure of any member.
  std::vector<Subgroup> base;
  for (const auto& cls : G.conjugacy_classes()) {
    if (cls.front() == Group::identity()) continue;
    Subgroup N = span(G, cls);
    bool duplicate = false;
    for (const auto& b : base) {
      if (b.members() == N.members()) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) base.push_back(N);
    admit(std::move(N));
  }

  // Every normal subgroup is the join of the closures of its elements.
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    for (const auto& b : base) {
      if (b.is_subgroup_of(nodes[i])) continue;
      admit(join(nodes[i], b));
    }
  }
  return NormalLattice(std::move(nodes));
}

}  // namespace

const NormalLattice& normal_lattice(const Group& G, std::size_t node_limit) {
  return G.memo<NormalLattice>("normal_lattice", [&] { return build_lattice(G, node_limit); });
}

std::vector<Subgroup> minimal_normals(const Group& G) {
  if (G.order() == 1) throw std::invalid_argument("the trivial group has no minimal normal subgroups");
  const auto& lattice = normal_lattice(G);
  std::vector<Subgroup> out;
  for (NodeId id : lattice.covers_above(lattice.bottom())) out.push_back(lattice.node(id));
  return out;
}

Subgroup socle(const Group& G) {
  Subgroup S = Subgroup::trivial(G);
  if (G.order() == 1) return S;
  for (const auto& M : minimal_normals(G)) S = join(S, M);
  return S;
}

namespace {

ChiefSeries make_series(const NormalLattice& lattice, std::vector<NodeId> chain) {
  ChiefSeries s;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    s.factor_orders.push_back(lattice.node(chain[i]).order() / lattice.node(chain[i - 1]).order());
  }
  s.chain = std::move(chain);
  return s;
}

}  // namespace

std::vector<ChiefSeries> chief_series_enumerate(const Group& G, std::size_t limit) {
  if (limit < 1) throw std::invalid_argument("enumeration limit must be positive");
  const auto& lattice = normal_lattice(G);
  std::vector<ChiefSeries> out;
  std::vector<NodeId> path{lattice.bottom()};
  auto dfs = [&](auto&& self) -> void {
    NodeId here = path.back();
    if (here == lattice.top()) {
      if (out.size() >= limit) {
        throw ResourceCapError("more than " + std::to_string(limit) + " chief series", out.size() + 1);
      }
      out.push_back(make_series(lattice, path));
      return;
    }
    for (NodeId next : lattice.covers_above(here)) {
      path.push_back(next);
      self(self);
      path.pop_back();
    }
  };
  dfs(dfs);
  return out;
}

ChiefSeries first_chief_series(const Group& G) {
  const auto& lattice = normal_lattice(G);
  std::vector<NodeId> chain{lattice.bottom()};
  while (chain.back() != lattice.top()) chain.push_back(lattice.covers_above(chain.back()).front());
  return make_series(lattice, std::move(chain));
}

QuotientMap quotient(const Group& G, const Subgroup& N) {
  if (N.parent_ptr().get() != &G) throw std::invalid_argument("kernel is not a subgroup of this group");
  if (!is_normal(N)) throw std::invalid_argument("quotient by a non-normal subgroup");

  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> coset(G.order(), kUnset);
  std::vector<Elem> reps;
  const auto kernel = N.elements();
  for (Elem x = 0; x < G.order(); ++x) {
    if (coset[x] != kUnset) continue;
    const auto c = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem n : kernel) coset[G.mul(n, x)] = c;
  }

  std::vector<Permutation> gens;
  for (Elem s : G.generator_indices()) {
    std::vector<Point> images(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) images[c] = coset[G.mul(reps[c], s)];
    gens.push_back(Permutation::from_images(std::move(images)));
  }

  QuotientMap q;
  q.source = G.shared_from_this();
  q.kernel = N;
  q.image = Group::generate(gens, reps.size(), G.order());
  q.element_map.assign(G.order(), 0);
  for (Elem y = 1; y < G.order(); ++y) {
    q.element_map[y] = q.image->right(q.element_map[G.bfs_parent(y)], G.bfs_via(y));
  }
  if (q.image->order() * N.order() != G.order()) throw std::logic_error("quotient order mismatch");
  return q;
}

Subgroup QuotientMap::image_of(const Subgroup& H) const {
  std::vector<Elem> seed;
  for (Elem h : H.generators()) seed.push_back(element_map[h]);
  return span(*image, seed);
}

Subgroup QuotientMap::preimage(const Subgroup& S) const {
  ElementSet bits = source->empty_set();
  for (Elem x = 0; x < source->order(); ++x) {
    if (S.contains(element_map[x])) bits.set(x);
  }
  return Subgroup::from_members(*source, bits);
}

SubgroupEmbedding as_group(const Subgroup& H) {
  const Group& G = H.parent();
  std::vector<Permutation> gens;
  for (Elem g : H.generators()) gens.push_back(G.element(g));
  SubgroupEmbedding e;
  e.in_parent = H;
  e.group = Group::generate(gens, G.degree(), G.order());
  e.to_parent.resize(e.group->order());
  e.from_parent.assign(G.order(), SubgroupEmbedding::kNotMember);
  for (Elem x = 0; x < e.group->order(); ++x) {
    // Follow the breadth-first tree instead of hashing permutations.
    Elem image = x == 0 ? Group::identity() : G.mul(e.to_parent[e.group->bfs_parent(x)], H.generators()[e.group->bfs_via(x)]);
    e.to_parent[x] = image;
    e.from_parent[image] = x;
  }
  return e;
}

Subgroup SubgroupEmbedding::to_local(const Subgroup& H) const {
  std::vector<Elem> seed;
  for (Elem h : H.generators()) {
    if (from_parent[h] == kNotMember) throw std::invalid_argument("subgroup is not inside the embedded group");
    seed.push_back(from_parent[h]);
  }
  return span(*group, seed);
}

Subgroup SubgroupEmbedding::to_parent_subgroup(const Subgroup& local) const {
  std::vector<Elem> seed;
  for (Elem x : local.generators()) seed.push_back(to_parent[x]);
  return span(in_parent.parent(), seed);
}

bool is_chief_factor(const Group& G, const Subgroup& K, const Subgroup& L) {
  if (!K.is_subgroup_of(L)) throw std::invalid_argument("chief factor requires K <= L");
  const auto& lattice = normal_lattice(G);
  return lattice.is_cover(lattice.id_of(K), lattice.id_of(L));
}

}  // namespace chieflab
