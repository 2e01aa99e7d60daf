#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chieflab/catalog.hpp"
#include "chieflab/group.hpp"
#include "chieflab/normal.hpp"
#include "chieflab/subgroup.hpp"
#include "json.hpp"

namespace chieflab {

enum class TheoremId { Thm15, Thm16, Prop31, Prop32, Prop33, Prop34, Prop35, Prop41 };

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view text);
const std::vector<TheoremId>& all_theorems();

/// Which sufficient condition a prop-4.1 instance tests.
enum class EmbeddingPremise { GenCap, PartialPi, SQuasinormal };
std::string_view to_string(EmbeddingPremise premise);

struct Binding {
  std::string group;
  std::optional<std::uint64_t> p;
  std::optional<NodeId> E;
  std::optional<NodeId> X;
  std::optional<NodeId> P;  // normal p-subgroup for prop-3.1 / prop-3.3
  std::optional<Subgroup> H;
  std::string h_label;
  std::optional<EmbeddingPremise> premise;

  nlohmann::json to_json(const Group& G) const;
};

enum class Outcome { Vacuous, Confirmed, Counterexample };
std::string_view to_string(Outcome outcome);

struct TheoremInstance {
  TheoremId id{};
  Binding binding;
  bool hypothesis_holds = false;
  std::optional<bool> conclusion_holds;
  Outcome verdict = Outcome::Vacuous;
};

struct Limits {
  std::size_t max_instances_per_group = 500;
};

struct InstanceList {
  std::vector<Binding> bindings;
  bool truncated = false;
};

InstanceList instances(TheoremId id, const std::string& name, const Group& G, const Limits& limits = {});
TheoremInstance check_instance(TheoremId id, const Group& G, Binding binding);

// Hypothesis building blocks, memoized per group.

/// Every maximal subgroup of the p-group P satisfies partial S-Pi in G.
bool maximal_subgroups_satisfy(const Group& G, const Subgroup& P, std::uint64_t p);
/// Every cyclic subgroup of P of order p, and of order 4 when P is a
/// non-abelian 2-group, satisfies partial S-Pi in G.
bool cyclic_subgroups_satisfy(const Group& G, const Subgroup& P, std::uint64_t p);
/// F*(E) for a normal subgroup E of G, as a subgroup of G.
Subgroup f_star_in(const Group& G, const Subgroup& E);
/// E/O_{p'}(E) <= Z_U(G/O_{p'}(E)).
bool upper_section_in_u_hypercentre(const Group& G, const Subgroup& E, std::uint64_t p);

struct TheoremTally {
  TheoremId id{};
  std::size_t instances = 0;
  std::size_t vacuous = 0;
  std::size_t confirmed = 0;
  std::size_t counterexamples = 0;
  std::vector<std::string> truncated_groups;
  std::vector<nlohmann::json> examples;
  std::vector<nlohmann::json> counterexample_bindings;
};

struct RunOptions {
  std::vector<TheoremId> theorems;
  std::size_t max_order = 400;
  bool include_example_1875 = false;
  std::size_t jobs = 1;
  Limits limits;
  std::size_t examples_per_theorem = 10;
};

struct RunReport {
  std::string tool_version;
  std::size_t max_order = 0;
  std::vector<std::string> groups;
  std::vector<TheoremTally> theorems;
  double timing_ms = 0;

  std::size_t total_counterexamples() const;
  nlohmann::json to_json() const;
};

RunReport run_corpus(const RunOptions& options);
RunReport run_entries(const std::vector<CorpusEntry>& corpus, const RunOptions& options);

}  // namespace chieflab
