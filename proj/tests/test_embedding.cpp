#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "chieflab/classify.hpp"
#include "chieflab/embedding.hpp"
#include "support.hpp"

using namespace chieflab;
using testing::make;
using testing::sub;

namespace {

struct Example13 {
  GroupPtr G = build(example_1875_expr());
  Subgroup H = span(*G, {G->generator(0), G->generator(2)});
};

const Example13& example13() {
  static const Example13 ex;
  return ex;
}

}  // namespace

TEST_CASE("order-1875 example") {
  const auto& ex = example13();
  const Group& G = *ex.G;
  REQUIRE(G.order() == 1875);
  CHECK(G.degree() == 625);
  REQUIRE(ex.H.order() == 25);
  const auto v = partial_s_pi(G, ex.H, 5);
  CHECK(v.holds);
  CHECK(testing::witness_valid_by_quotients(G, ex.H, 5, v.witness));
  const auto g = gen_cap(G, ex.H);
  CHECK_FALSE(g.holds);
  REQUIRE(g.refutation.has_value());
  const auto& L = normal_lattice(G);
  CHECK(L.node(g.refutation->lower).is_trivial());
  CHECK(L.node(g.refutation->upper).order() == 25);
  const auto X = factor_section(G, ex.H, g.refutation->lower, g.refutation->upper).X;
  CHECK(normalizer_index(G, X) == 3);
  CHECK_FALSE(cap(G, ex.H).holds);
}

TEST_CASE("A5 with a Sylow 5-subgroup") {
  auto A5 = make("Alt(5)");
  const auto H = sylow(*A5, 5);
  CHECK(partial_s_pi(*A5, H, 5).holds);
  CHECK_FALSE(partial_pi(*A5, H).holds);
  CHECK(A5->order() / normalizer(*A5, H).order() == 6);
  CHECK_FALSE(s_quasinormal(*A5, H));
}

TEST_CASE("degenerate subgroups") {
  for (const auto& entry : builtin_corpus(200)) {
    const Group& G = *entry.group;
    CAPTURE(entry.name);
    const auto T = Subgroup::trivial(G);
    CHECK(partial_pi(G, T).holds);
    CHECK(cap(G, T).holds);
    CHECK(gen_cap(G, T).holds);
    for (auto p : prime_divisors(G.order())) CHECK(partial_s_pi(G, T, p).holds);
    for (const auto& N : normal_lattice(G).nodes()) {
      CHECK(partial_pi(G, N).holds);
      CHECK(cap(G, N).holds);
      CHECK(gen_cap(G, N).holds);
      CHECK(s_quasinormal(G, N));
    }
    if (const auto p = prime_power_base(G.order())) CHECK(partial_s_pi(G, Subgroup::whole(G), p).holds);
  }
}

TEST_CASE("partial_s_pi preconditions") {
  auto S4 = make("Sym(4)");
  CHECK_THROWS_AS(partial_s_pi(*S4, sub(*S4, {"(1 2 3)"}), 2), std::invalid_argument);
  CHECK_THROWS_AS(partial_s_pi(*S4, sub(*S4, {"(1 2)"}), 4), std::invalid_argument);
}

TEST_CASE("cap examples") {
  auto S4 = make("Sym(4)");
  CHECK(cap(*S4, sylow(*S4, 2)).holds);
  // <(1 2)(3 4)> neither covers nor avoids V4/1
  const auto v = cap(*S4, sub(*S4, {"(1 2)(3 4)"}));
  CHECK_FALSE(v.holds);
  REQUIRE(v.refutation.has_value());
  CHECK(normal_lattice(*S4).node(v.refutation->upper).order() == 4);
}

TEST_CASE("s_quasinormal examples") {
  auto S3 = make("Sym(3)");
  CHECK_FALSE(s_quasinormal(*S3, sub(*S3, {"(1 2)"})));
  CHECK(s_quasinormal(*S3, sub(*S3, {"(1 2 3)"})));
  auto S4 = make("Sym(4)");
  const auto V = sub(*S4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(s_quasinormal(*S4, V));
  CHECK(s_qn_embedded(*S4, V));
  CHECK(s_qn_embedded(*S4, sylow(*S4, 2)));
}

TEST_CASE("witnesses re-validate through explicit quotients") {
  for (const auto& entry : builtin_corpus(120)) {
    const Group& G = *entry.group;
    CAPTURE(entry.name);
    for (const auto& item : testing::subgroup_pool(G)) {
      const auto v = partial_s_pi(G, item.H, item.p);
      if (v.holds) CHECK(testing::witness_valid_by_quotients(G, item.H, item.p, v.witness));
    }
  }
}

TEST_CASE("partial_s_pi agrees with exhaustive chief series search") {
  for (const auto& entry : builtin_corpus(120)) {
    const Group& G = *entry.group;
    CAPTURE(entry.name);
    std::vector<ChiefSeries> all;
    try {
      all = chief_series_enumerate(G, 200);
    } catch (const std::exception&) {
      continue;
    }
    for (const auto& item : testing::subgroup_pool(G)) {
      bool any = false;
      for (const auto& s : all) any = any || testing::witness_valid_by_quotients(G, item.H, item.p, s.chain);
      CHECK(partial_s_pi(G, item.H, item.p).holds == any);
    }
  }
}

TEST_CASE("universal refutations re-check as violating") {
  for (const auto& entry : builtin_corpus(120)) {
    const Group& G = *entry.group;
    CAPTURE(entry.name);
    const auto& L = normal_lattice(G);
    for (const auto& item : testing::subgroup_pool(G)) {
      const auto c = cap(G, item.H);
      if (!c.holds) {
        REQUIRE(c.refutation.has_value());
        const Subgroup& K = L.node(c.refutation->lower);
        const Subgroup& U = L.node(c.refutation->upper);
        CHECK(L.is_cover(c.refutation->lower, c.refutation->upper));
        CHECK_FALSE(intersect(item.H, U).is_subgroup_of(K));
        CHECK_FALSE(U.members().is_subset_of(product(item.H, K).elements));
      }
      const auto g = gen_cap(G, item.H);
      if (!g.holds) {
        REQUIRE(g.refutation.has_value());
        CHECK(L.is_cover(g.refutation->lower, g.refutation->upper));
        CHECK_FALSE(intersect(item.H, L.node(g.refutation->upper)).is_subgroup_of(L.node(g.refutation->lower)));
      }
      if (c.holds) CHECK(g.holds);
    }
  }
}

TEST_CASE("s_quasinormal by brute-force permutability") {
  for (const auto& entry : builtin_corpus(120)) {
    const Group& G = *entry.group;
    CAPTURE(entry.name);
    for (const auto& item : testing::subgroup_pool(G)) {
      bool all = true;
      for (auto p : prime_divisors(G.order())) {
        for (const auto& S : sylow_subgroups(G, p)) {
          const auto hs = product(item.H, S);
          const auto sh = product(S, item.H);
          all = all && hs.elements == sh.elements;
        }
      }
      CHECK(s_quasinormal(G, item.H) == all);
    }
  }
}

TEST_CASE("implications into the partial S-Pi-property") {
  std::size_t triggered = 0;
  for (const auto& entry : builtin_corpus(200)) {
    const Group& G = *entry.group;
    CAPTURE(entry.name);
    for (const auto& item : testing::subgroup_pool(G)) {
      const bool target = partial_s_pi(G, item.H, item.p).holds;
      const bool premise = gen_cap(G, item.H).holds || partial_pi(G, item.H).holds || s_quasinormal(G, item.H);
      triggered += premise;
      if (premise) CHECK(target);
    }
  }
  CHECK(triggered > 0);
}

TEST_CASE("closure under normal subgroups and quotients") {
  for (const auto& entry : builtin_corpus(120)) {
    const Group& G = *entry.group;
    CAPTURE(entry.name);
    const auto& L = normal_lattice(G);
    std::vector<SubgroupEmbedding> embeddings;
    std::vector<QuotientMap> quotients;
    for (const auto& N : L.nodes()) {
      embeddings.push_back(as_group(N));
      quotients.push_back(quotient(G, N));
    }
    for (const auto& item : testing::subgroup_pool(G)) {
      if (!partial_s_pi(G, item.H, item.p).holds) continue;
      for (NodeId n = 0; n < L.size(); ++n) {
        const Subgroup& N = L.node(n);
        if (item.H.is_subgroup_of(N)) {
          const auto& e = embeddings[n];
          CHECK(partial_s_pi(*e.group, e.to_local(item.H), item.p).holds);
        }
        if (N.is_subgroup_of(item.H) || std::gcd<std::uint64_t, std::uint64_t>(item.p, N.order()) == 1) {
          const auto& q = quotients[n];
          CHECK(partial_s_pi(*q.image, q.image_of(item.H), item.p).holds);
        }
      }
    }
    for (auto p : prime_divisors(G.order())) {
      const auto P = sylow(G, p);
      bool all = true;
      for (const auto& M : p_group_maximal_subgroups(P, p)) all = all && partial_s_pi(G, M, p).holds;
      if (!all) continue;
      for (NodeId n = 0; n < L.size(); ++n) {
        const auto& q = quotients[n];
        const auto img = q.image_of(P);
        if (img.is_trivial()) continue;
        for (const auto& M : p_group_maximal_subgroups(img, p)) CHECK(partial_s_pi(*q.image, M, p).holds);
      }
    }
  }
}
