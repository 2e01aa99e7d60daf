// Command-line front end: check, invariants, chief, verify, catalog list.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "chieflab/catalog.hpp"
#include "chieflab/classify.hpp"
#include "chieflab/embedding.hpp"
#include "chieflab/errors.hpp"
#include "chieflab/harness.hpp"
#include "chieflab/normal.hpp"
#include "chieflab/subgroup.hpp"

using namespace chieflab;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitCounterexample = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadedGroup {
  std::string name;
  GroupPtr group;
};

LoadedGroup load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read group file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  GroupFile file = parse_group_file(buf.str());
  std::vector<std::string> warnings;
  GroupPtr G = build(file.expr, Group::kDefaultCap, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return {file.name, G};
}

Subgroup parse_subgroup(const Group& G, const std::string& text) {
  std::vector<Elem> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    const std::string piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t") != std::string::npos) {
      const Permutation p = parse_cycles(piece, G.degree());
      auto idx = G.index_of(p);
      if (!idx) throw UsageError("subgroup generator " + p.to_cycles() + " is not an element of the group");
      gens.push_back(*idx);
    }
    start = end + 1;
  }
  return span(G, gens);
}

json subgroup_json(const Group& G, const Subgroup& H) {
  json gens = json::array();
  for (Elem g : H.generators()) gens.push_back(G.element(g).to_cycles());
  return {{"order", H.order()}, {"generators", gens}};
}

std::string subgroup_text(const Group& G, const Subgroup& H) {
  std::string out = "order " + std::to_string(H.order());
  if (!H.is_trivial()) {
    out += " <";
    bool first = true;
    for (Elem g : H.generators()) {
      if (!first) out += ", ";
      out += G.element(g).to_cycles();
      first = false;
    }
    out += ">";
  }
  return out;
}

json verdict_json(const Group& G, const Verdict& v) {
  const auto& lattice = normal_lattice(G);
  json j{{"holds", v.holds}};
  if (!v.witness.empty()) {
    json chain = json::array();
    for (NodeId n : v.witness) chain.push_back(lattice.node(n).order());
    j["witness_orders"] = chain;
  }
  if (v.refutation) {
    j["refutation"] = {{"lower_order", lattice.node(v.refutation->lower).order()},
                       {"upper_order", lattice.node(v.refutation->upper).order()},
                       {"clause", v.refutation->clause}};
  }
  return j;
}

int run_check(const std::string& path, const std::string& subgroup, const std::string& property,
              std::optional<std::uint64_t> prime, const std::string& format) {
  LoadedGroup loaded = load_group(path);
  const Group& G = *loaded.group;
  const Subgroup H = parse_subgroup(G, subgroup);
  json out{{"group", loaded.name}, {"group_order", G.order()}, {"subgroup", subgroup_json(G, H)}, {"property", property}};

  if (property == "partial-s-pi") {
    std::uint64_t p = 0;
    if (prime) {
      p = *prime;
    } else {
      p = prime_power_base(H.order());
      if (p == 0) throw UsageError("--prime is required when |H| is not a prime power");
    }
    out["prime"] = p;
    out["result"] = verdict_json(G, partial_s_pi(G, H, p));
  } else if (property == "partial-pi") {
    out["result"] = verdict_json(G, partial_pi(G, H));
  } else if (property == "cap") {
    out["result"] = verdict_json(G, cap(G, H));
  } else if (property == "gen-cap") {
    out["result"] = verdict_json(G, gen_cap(G, H));
  } else if (property == "s-quasinormal") {
    out["result"] = {{"holds", s_quasinormal(G, H)}};
  } else {
    const SqeSearch s = s_qn_embedded_search(G, H);
    json w = json::array();
    for (const auto& [q, K] : s.witnesses) {
      w.push_back({{"q", q}, {"overgroup", K ? subgroup_json(G, *K) : json(nullptr)}});
    }
    out["result"] = {{"holds", s.holds}, {"witnesses", w}, {"candidates_tried", s.candidates_tried}};
  }

  if (format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << property << " for H (" << subgroup_text(G, H) << ") in " << loaded.name << " (order " << G.order()
              << "): " << (out["result"]["holds"].get<bool>() ? "holds" : "fails") << "\n";
    const json& r = out["result"];
    if (r.contains("witness_orders")) std::cout << "  witness chief series orders: " << r["witness_orders"].dump() << "\n";
    if (r.contains("refutation")) {
      std::cout << "  refuted at factor " << r["refutation"]["upper_order"] << "/" << r["refutation"]["lower_order"]
                << ": " << r["refutation"]["clause"].get<std::string>() << "\n";
    }
  }
  return kExitOk;
}

int run_invariants(const std::string& path, const std::string& format) {
  LoadedGroup loaded = load_group(path);
  const Group& G = *loaded.group;
  const ClassReport r = class_report(G);
  json primes = json::array();
  for (const auto& pr : r.primes) {
    primes.push_back({{"p", pr.p},
                      {"p_soluble", pr.p_soluble},
                      {"p_supersoluble", pr.p_supersoluble},
                      {"p_nilpotent", pr.p_nilpotent},
                      {"sylow", subgroup_json(G, pr.sylow)},
                      {"O_p", subgroup_json(G, pr.o_p)},
                      {"O_p_prime", subgroup_json(G, pr.o_p_prime)},
                      {"F_p", subgroup_json(G, pr.fitting_p)}});
  }
  json out{{"group", loaded.name},
           {"order", r.order},
           {"abelian", r.abelian},
           {"nilpotent", r.nilpotent},
           {"soluble", r.soluble},
           {"supersoluble", r.supersoluble},
           {"center", subgroup_json(G, r.center)},
           {"hypercentre", subgroup_json(G, r.hypercentre)},
           {"u_hypercentre", subgroup_json(G, r.u_hypercentre)},
           {"fitting", subgroup_json(G, r.fitting)},
           {"f_star", subgroup_json(G, r.f_star)},
           {"nilpotent_residual", subgroup_json(G, r.nilpotent_residual)},
           {"derived", subgroup_json(G, r.derived)},
           {"primes", primes}};
  if (format == "json") {
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << loaded.name << ", order " << r.order << "\n"
            << "  abelian " << yn(r.abelian) << ", nilpotent " << yn(r.nilpotent) << ", soluble " << yn(r.soluble)
            << ", supersoluble " << yn(r.supersoluble) << "\n"
            << "  Z(G)      " << subgroup_text(G, r.center) << "\n"
            << "  Z_inf(G)  " << subgroup_text(G, r.hypercentre) << "\n"
            << "  Z_U(G)    " << subgroup_text(G, r.u_hypercentre) << "\n"
            << "  F(G)      " << subgroup_text(G, r.fitting) << "\n"
            << "  F*(G)     " << subgroup_text(G, r.f_star) << "\n"
            << "  G^N       " << subgroup_text(G, r.nilpotent_residual) << "\n"
            << "  G'        " << subgroup_text(G, r.derived) << "\n";
  for (const auto& pr : r.primes) {
    std::cout << "  p=" << pr.p << ": p-soluble " << yn(pr.p_soluble) << ", p-supersoluble " << yn(pr.p_supersoluble)
              << ", p-nilpotent " << yn(pr.p_nilpotent) << ", |O_p| " << pr.o_p.order() << ", |O_p'| "
              << pr.o_p_prime.order() << ", |F_p| " << pr.fitting_p.order() << "\n";
  }
  return kExitOk;
}

int run_chief(const std::string& path, std::size_t limit) {
  LoadedGroup loaded = load_group(path);
  const Group& G = *loaded.group;
  const auto& lattice = normal_lattice(G);
  const auto all = chief_series_enumerate(G, limit);
  std::cout << loaded.name << ", order " << G.order() << ": " << lattice.size() << " normal subgroups, "
            << all.size() << " chief series\n";
  for (const auto& s : all) {
    std::cout << " ";
    for (NodeId n : s.chain) std::cout << " " << lattice.node(n).order();
    std::cout << "   factors";
    for (auto f : s.factor_orders) std::cout << " " << f;
    std::cout << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& theorem, std::size_t max_order, bool include_1875, std::size_t jobs,
               const std::string& out_path) {
  RunOptions options;
  if (theorem == "all") {
    options.theorems = all_theorems();
  } else {
    auto id = parse_theorem_id(theorem);
    if (!id) throw UsageError("unknown theorem id '" + theorem + "'");
    options.theorems = {*id};
  }
  options.max_order = max_order;
  options.include_example_1875 = include_1875;
  options.jobs = jobs;
  const RunReport report = run_corpus(options);

  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write report to '" + out_path + "'");
  out << report.to_json().dump(2) << "\n";
  out.close();
  if (!out) throw std::runtime_error("failed writing report to '" + out_path + "'");

  std::cout << report.groups.size() << " groups, max order " << max_order << "\n";
  for (const auto& t : report.theorems) {
    std::cout << "  " << to_string(t.id) << ": " << t.instances << " instances, " << t.confirmed << " confirmed, "
              << t.vacuous << " vacuous, " << t.counterexamples << " counterexamples";
    if (!t.truncated_groups.empty()) std::cout << " (truncated in " << t.truncated_groups.size() << " groups)";
    std::cout << "\n";
  }
  return report.total_counterexamples() == 0 ? kExitOk : kExitCounterexample;
}

int run_catalog_list(std::size_t max_order) {
  for (const auto& e : builtin_corpus(max_order, false)) {
    std::cout << e.name << "\t" << e.group->order() << "\t" << e.expr.to_string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chief-factor embedding properties of finite permutation groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(CHIEFLAB_VERSION));

  std::string group_path, subgroup_text_arg, property, format = "text", theorem = "all", out_path;
  std::optional<std::uint64_t> prime;
  std::size_t limit = 1000, max_order = 400, jobs = 1, list_max = 400;
  bool include_1875 = false;

  auto* check = app.add_subcommand("check", "Test an embedding property of a subgroup");
  check->add_option("--group", group_path, "Group file")->required();
  check->add_option("--subgroup", subgroup_text_arg, "Generators as cycles separated by ';'")->required();
  check->add_option("--property", property)
      ->required()
      ->check(CLI::IsMember({"partial-s-pi", "partial-pi", "cap", "gen-cap", "s-quasinormal", "s-qn-embedded"}));
  check->add_option("--prime", prime, "Prime for partial-s-pi");
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* inv = app.add_subcommand("invariants", "Print the class report of a group");
  inv->add_option("--group", group_path)->required();
  inv->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* chief = app.add_subcommand("chief", "Enumerate chief series");
  chief->add_option("--group", group_path)->required();
  chief->add_option("--enumerate-limit", limit)->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Check theorem instances over the built-in corpus");
  verify->add_option("--theorem", theorem, "Theorem id or 'all'");
  verify->add_option("--max-order", max_order)->check(CLI::PositiveNumber);
  verify->add_flag("--include-example-1875", include_1875);
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "Report path")->required();

  auto* catalog = app.add_subcommand("catalog", "Built-in corpus");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List corpus groups");
  list->add_option("--max-order", list_max)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return run_check(group_path, subgroup_text_arg, property, prime, format);
    if (*inv) return run_invariants(group_path, format);
    if (*chief) return run_chief(group_path, limit);
    if (*verify) return run_verify(theorem, max_order, include_1875, jobs, out_path);
    if (*list) return run_catalog_list(list_max);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceCapError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
