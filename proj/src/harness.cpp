#include "chieflab/harness.hpp"

#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "chieflab/classify.hpp"
#include "chieflab/embedding.hpp"

namespace chieflab {

namespace {

struct TheoremName {
  TheoremId id;
  std::string_view name;
};

constexpr TheoremName kNames[] = {
    {TheoremId::Thm15, "thm-1.5"},   {TheoremId::Thm16, "thm-1.6"},   {TheoremId::Prop31, "prop-3.1"},
    {TheoremId::Prop32, "prop-3.2"}, {TheoremId::Prop33, "prop-3.3"}, {TheoremId::Prop34, "prop-3.4"},
    {TheoremId::Prop35, "prop-3.5"}, {TheoremId::Prop41, "prop-4.1"},
};

std::string set_key(const Subgroup& H) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string key;
  const auto members = H.elements();
  key.reserve(members.size() * 4);
  for (Elem x : members) {
    for (int shift = 28; shift >= 0; shift -= 4) key += kHex[(x >> shift) & 15];
  }
  return key;
}

nlohmann::json node_json(const Group& G, NodeId id) {
  return {{"node", id}, {"order", normal_lattice(G).node(id).order()}};
}

}  // namespace

std::string_view to_string(TheoremId id) {
  for (const auto& n : kNames) {
    if (n.id == id) return n.name;
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  for (const auto& n : kNames) {
    if (n.name == text) return n.id;
  }
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> out;
    for (const auto& n : kNames) out.push_back(n.id);
    return out;
  }();
  return ids;
}

std::string_view to_string(EmbeddingPremise premise) {
  switch (premise) {
    case EmbeddingPremise::GenCap:
      return "gen-cap";
    case EmbeddingPremise::PartialPi:
      return "partial-pi";
    case EmbeddingPremise::SQuasinormal:
      return "s-quasinormal";
  }
  return "?";
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Vacuous:
      return "vacuous";
    case Outcome::Confirmed:
      return "confirmed";
    case Outcome::Counterexample:
      return "COUNTEREXAMPLE";
  }
  return "?";
}

nlohmann::json Binding::to_json(const Group& G) const {
  nlohmann::json j;
  j["group"] = group;
  if (p) j["p"] = *p;
  if (E) j["E"] = node_json(G, *E);
  if (X) j["X"] = node_json(G, *X);
  if (P) j["P"] = node_json(G, *P);
  if (H) j["H"] = {{"label", h_label}, {"order", H->order()}};
  if (premise) j["premise"] = std::string(to_string(*premise));
  return j;
}

// ---------------------------------------------------------------------------
// Hypothesis building blocks

bool maximal_subgroups_satisfy(const Group& G, const Subgroup& P, std::uint64_t p) {
  return G.memo<bool>("hyp:max:" + std::to_string(p) + ":" + set_key(P), [&] {
    for (const auto& M : p_group_maximal_subgroups(P, p)) {
      if (!partial_s_pi(G, M, p).holds) return false;
    }
    return true;
  });
}

bool cyclic_subgroups_satisfy(const Group& G, const Subgroup& P, std::uint64_t p) {
  return G.memo<bool>("hyp:cyc:" + std::to_string(p) + ":" + set_key(P), [&] {
    std::vector<Subgroup> pool = cyclic_subgroups_of_order(P, p, p);
    if (p == 2 && !is_abelian(P)) {
      auto fours = cyclic_subgroups_of_order(P, p, 4);
      pool.insert(pool.end(), fours.begin(), fours.end());
    }
    for (const auto& C : pool) {
      if (!partial_s_pi(G, C, p).holds) return false;
    }
    return true;
  });
}

Subgroup f_star_in(const Group& /*G*/, const Subgroup& E) {
  if (lower_central_series(E).back().is_trivial()) return E;
  const SubgroupEmbedding emb = as_group(E);
  return emb.to_parent_subgroup(f_star(*emb.group));
}

bool upper_section_in_u_hypercentre(const Group& G, const Subgroup& E, std::uint64_t p) {
  const Subgroup O = radical_p_prime_in(G, E, p);
  if (O.is_trivial()) return E.is_subgroup_of(u_hypercentre(G));
  const NodeId o = normal_lattice(G).id_of(O);
  const QuotientMap& q = G.memo<QuotientMap>("quotient:" + std::to_string(o), [&] { return quotient(G, O); });
  return q.image_of(E).is_subgroup_of(u_hypercentre(*q.image));
}

namespace {

bool sylow_condition(const Group& G, const Subgroup& P, std::uint64_t p) {
  return maximal_subgroups_satisfy(G, P, p) || cyclic_subgroups_satisfy(G, P, p);
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

struct PoolEntry {
  Subgroup H;
  std::uint64_t p;
  std::string label;
};

std::vector<PoolEntry> standard_pool(const Group& G) {
  std::vector<PoolEntry> pool;
  for (std::uint64_t p : prime_divisors(G.order())) {
    const Subgroup P = sylow(G, p);
    std::vector<ElementSet> seen;
    auto add = [&](const Subgroup& H, const std::string& label) {
      for (const auto& s : seen) {
        if (s == H.members()) return;
      }
      seen.push_back(H.members());
      pool.push_back({H, p, label});
    };
    add(P, "sylow" + std::to_string(p));
    auto maxes = p_group_maximal_subgroups(P, p);
    for (std::size_t i = 0; i < maxes.size(); ++i) add(maxes[i], "max" + std::to_string(p) + "#" + std::to_string(i));
    auto cycs = cyclic_subgroups_of_order(P, p, p);
    for (std::size_t i = 0; i < cycs.size(); ++i) add(cycs[i], "cyc" + std::to_string(p) + "#" + std::to_string(i));
    if (p == 2) {
      auto fours = cyclic_subgroups_of_order(P, 2, 4);
      for (std::size_t i = 0; i < fours.size(); ++i) add(fours[i], "cyc4#" + std::to_string(i));
    }
  }
  return pool;
}

}  // namespace

// ---------------------------------------------------------------------------
// Instances

namespace {

Binding make_binding(std::optional<std::uint64_t> p, std::optional<NodeId> E, std::optional<NodeId> X,
                     std::optional<NodeId> P) {
  Binding b;
  b.p = p;
  b.E = E;
  b.X = X;
  b.P = P;
  return b;
}

}  // namespace

InstanceList instances(TheoremId id, const std::string& name, const Group& G, const Limits& limits) {
  InstanceList out;
  // Every statement is degenerate in the trivial group.
  if (G.order() == 1) return out;
  const auto& lattice = normal_lattice(G);
  const auto primes = prime_divisors(G.order());
  auto push = [&](Binding b) -> bool {
    if (out.bindings.size() >= limits.max_instances_per_group) {
      out.truncated = true;
      return false;
    }
    b.group = name;
    out.bindings.push_back(std::move(b));
    return true;
  };

  switch (id) {
    case TheoremId::Prop31:
    case TheoremId::Prop33:
      for (std::uint64_t p : primes) {
        for (NodeId n = 0; n < lattice.size(); ++n) {
          if (is_p_number(lattice.node(n).order(), p) && !push(make_binding(p, std::nullopt, std::nullopt, n))) return out;
        }
      }
      break;
    case TheoremId::Prop32:
    case TheoremId::Prop34:
      for (NodeId e = 1; e < lattice.size(); ++e) {
        const std::size_t order = lattice.node(e).order();
        for (std::uint64_t p : prime_divisors(order)) {
          if (gcd_u(order, p - 1) == 1 && !push(make_binding(p, e, std::nullopt, std::nullopt))) return out;
        }
      }
      break;
    case TheoremId::Prop35:
      for (std::uint64_t p : primes) {
        for (NodeId e = 0; e < lattice.size(); ++e) {
          if (is_p_soluble_in(G, lattice.node(e), p) && !push(make_binding(p, e, std::nullopt, std::nullopt))) return out;
        }
      }
      break;
    case TheoremId::Thm15:
      for (NodeId e = 0; e < lattice.size(); ++e) {
        const Subgroup& E = lattice.node(e);
        const NodeId fs = lattice.id_of(f_star_in(G, E));
        for (NodeId x = 0; x < lattice.size(); ++x) {
          if (lattice.contains(x, fs) && lattice.contains(e, x) && !push(make_binding(std::nullopt, e, x, std::nullopt))) return out;
        }
      }
      break;
    case TheoremId::Thm16:
      for (std::uint64_t p : primes) {
        for (NodeId e = 0; e < lattice.size(); ++e) {
          const Subgroup& E = lattice.node(e);
          if (!is_p_soluble_in(G, E, p)) continue;
          const NodeId fp = lattice.id_of(fitting_p_in(G, E, p));
          for (NodeId x = 0; x < lattice.size(); ++x) {
            if (lattice.contains(x, fp) && lattice.contains(e, x) && is_p_soluble_in(G, lattice.node(x), p) &&
                !push(make_binding(p, e, x, std::nullopt))) {
              return out;
            }
          }
        }
      }
      break;
    case TheoremId::Prop41:
      for (auto& entry : standard_pool(G)) {
        for (auto premise : {EmbeddingPremise::GenCap, EmbeddingPremise::PartialPi, EmbeddingPremise::SQuasinormal}) {
          Binding b;
          b.p = entry.p;
          b.H = entry.H;
          b.h_label = entry.label;
          b.premise = premise;
          if (!push(std::move(b))) return out;
        }
      }
      break;
  }
  return out;
}

TheoremInstance check_instance(TheoremId id, const Group& G, Binding binding) {
  const auto& lattice = normal_lattice(G);
  TheoremInstance inst;
  inst.id = id;
  auto node = [&](const std::optional<NodeId>& n) -> const Subgroup& {
    if (!n) throw std::invalid_argument("binding is missing a subgroup for " + std::string(to_string(id)));
    return lattice.node(*n);
  };
  auto prime = [&] {
    if (!binding.p) throw std::invalid_argument("binding is missing p for " + std::string(to_string(id)));
    return *binding.p;
  };

  bool hyp = false;
  std::function<bool()> conclusion;
  switch (id) {
    case TheoremId::Prop31:
    case TheoremId::Prop33: {
      const Subgroup& P = node(binding.P);
      const std::uint64_t p = prime();
      hyp = id == TheoremId::Prop31 ? maximal_subgroups_satisfy(G, P, p) : cyclic_subgroups_satisfy(G, P, p);
      conclusion = [&] { return P.is_subgroup_of(u_hypercentre(G)); };
      break;
    }
    case TheoremId::Prop32:
    case TheoremId::Prop34: {
      const Subgroup& E = node(binding.E);
      const std::uint64_t p = prime();
      const Subgroup P = sylow(E, p);
      hyp = id == TheoremId::Prop32 ? maximal_subgroups_satisfy(G, P, p) : cyclic_subgroups_satisfy(G, P, p);
      conclusion = [&, p] { return is_p_nilpotent_in(G, E, p); };
      break;
    }
    case TheoremId::Prop35: {
      const Subgroup& E = node(binding.E);
      const std::uint64_t p = prime();
      hyp = sylow_condition(G, sylow(E, p), p);
      conclusion = [&, p] { return upper_section_in_u_hypercentre(G, E, p); };
      break;
    }
    case TheoremId::Thm15: {
      const Subgroup& E = node(binding.E);
      const Subgroup& X = node(binding.X);
      hyp = true;
      for (std::uint64_t q : prime_divisors(X.order())) {
        const Subgroup P = sylow(X, q);
        if (is_cyclic(P)) continue;
        if (!sylow_condition(G, P, q)) {
          hyp = false;
          break;
        }
      }
      conclusion = [&] { return E.is_subgroup_of(u_hypercentre(G)); };
      break;
    }
    case TheoremId::Thm16: {
      const Subgroup& E = node(binding.E);
      const Subgroup& X = node(binding.X);
      const std::uint64_t p = prime();
      hyp = sylow_condition(G, sylow(X, p), p);
      conclusion = [&, p] { return upper_section_in_u_hypercentre(G, E, p); };
      break;
    }
    case TheoremId::Prop41: {
      if (!binding.H || !binding.premise) throw std::invalid_argument("prop-4.1 binding needs H and a premise");
      const Subgroup& H = *binding.H;
      const std::uint64_t p = prime();
      switch (*binding.premise) {
        case EmbeddingPremise::GenCap:
          hyp = gen_cap(G, H).holds;
          break;
        case EmbeddingPremise::PartialPi:
          hyp = partial_pi(G, H).holds;
          break;
        case EmbeddingPremise::SQuasinormal:
          hyp = s_quasinormal(G, H);
          break;
      }
      conclusion = [&, p] { return partial_s_pi(G, H, p).holds; };
      break;
    }
  }

  inst.hypothesis_holds = hyp;
  if (hyp) {
    inst.conclusion_holds = conclusion();
    inst.verdict = *inst.conclusion_holds ? Outcome::Confirmed : Outcome::Counterexample;
  }
  inst.binding = std::move(binding);
  return inst;
}

// ---------------------------------------------------------------------------
// Corpus runs

std::size_t RunReport::total_counterexamples() const {
  std::size_t n = 0;
  for (const auto& t : theorems) n += t.counterexamples;
  return n;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["tool_version"] = tool_version;
  j["corpus"] = {{"max_order", max_order}, {"group_count", groups.size()}, {"groups", groups}};
  j["theorems"] = nlohmann::json::array();
  for (const auto& t : theorems) {
    j["theorems"].push_back({
        {"id", std::string(to_string(t.id))},
        {"instances", t.instances},
        {"vacuous", t.vacuous},
        {"confirmed", t.confirmed},
        {"counterexamples", t.counterexamples},
        {"truncated_groups", t.truncated_groups},
        {"examples", t.examples},
        {"counterexample_bindings", t.counterexample_bindings},
    });
  }
  j["timing_ms"] = timing_ms;
  return j;
}

namespace {

struct GroupResult {
  std::vector<TheoremTally> tallies;
};

GroupResult run_group(const CorpusEntry& entry, const RunOptions& options) {
  GroupResult r;
  const Group& G = *entry.group;
  for (TheoremId id : options.theorems) {
    TheoremTally t;
    t.id = id;
    InstanceList list = instances(id, entry.name, G, options.limits);
    if (list.truncated) t.truncated_groups.push_back(entry.name);
    for (auto& b : list.bindings) {
      TheoremInstance inst = check_instance(id, G, std::move(b));
      ++t.instances;
      switch (inst.verdict) {
        case Outcome::Vacuous:
          ++t.vacuous;
          break;
        case Outcome::Confirmed:
          ++t.confirmed;
          if (t.examples.size() < options.examples_per_theorem) t.examples.push_back(inst.binding.to_json(G));
          break;
        case Outcome::Counterexample:
          ++t.counterexamples;
          t.counterexample_bindings.push_back(inst.binding.to_json(G));
          break;
      }
    }
    r.tallies.push_back(std::move(t));
  }
  return r;
}

}  // namespace

RunReport run_entries(const std::vector<CorpusEntry>& corpus, const RunOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<GroupResult> results(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) results[i] = run_group(corpus[i], options);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, corpus.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  RunReport report;
  report.tool_version = CHIEFLAB_VERSION;
  report.max_order = options.max_order;
  for (const auto& e : corpus) report.groups.push_back(e.name);
  for (std::size_t k = 0; k < options.theorems.size(); ++k) {
    TheoremTally total;
    total.id = options.theorems[k];
    for (const auto& r : results) {
      const TheoremTally& t = r.tallies[k];
      total.instances += t.instances;
      total.vacuous += t.vacuous;
      total.confirmed += t.confirmed;
      total.counterexamples += t.counterexamples;
      total.truncated_groups.insert(total.truncated_groups.end(), t.truncated_groups.begin(), t.truncated_groups.end());
      for (const auto& ex : t.examples) {
        if (total.examples.size() < options.examples_per_theorem) total.examples.push_back(ex);
      }
      total.counterexample_bindings.insert(total.counterexample_bindings.end(), t.counterexample_bindings.begin(),
                                           t.counterexample_bindings.end());
    }
    report.theorems.push_back(std::move(total));
  }
  report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

RunReport run_corpus(const RunOptions& options) {
  return run_entries(builtin_corpus(options.max_order, options.include_example_1875), options);
}

}  // namespace chieflab
