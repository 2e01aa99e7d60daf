#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chieflab/classify.hpp"
#include "support.hpp"

using namespace chieflab;
using testing::el;
using testing::make;
using testing::sub;

TEST_CASE("span examples") {
  auto A5 = make("Alt(5)");
  CHECK(span(*A5, {Group::identity()}).is_trivial());
  CHECK(sub(*A5, {"(1 2 3 4 5)"}).order() == 5);
  auto A4 = make("Alt(4)");
  CHECK(sub(*A4, {"(1 2)(3 4)", "(1 3)(2 4)"}).order() == 4);
}

TEST_CASE("span matches brute-force closure") {
  for (const auto& entry : builtin_corpus(120)) {
    const Group& G = *entry.group;
    CAPTURE(entry.name);
    for (Elem a = 0; a < G.order(); a += 7) {
      const Elem b = static_cast<Elem>((a * 13 + 5) % G.order());
      CHECK(span(G, {a, b}).members() == testing::brute_closure(G, {a, b}));
    }
  }
}

TEST_CASE("from_members rejects non-subgroups") {
  auto S3 = make("Sym(3)");
  ElementSet s = S3->empty_set();
  s.set(0);
  s.set(el(*S3, "(1 2)"));
  CHECK(Subgroup::from_members(*S3, s).order() == 2);
  s.set(el(*S3, "(1 3)"));
  CHECK_THROWS_AS(Subgroup::from_members(*S3, s), std::invalid_argument);
}

TEST_CASE("intersect examples") {
  auto S3 = make("Sym(3)");
  const auto A = sub(*S3, {"(1 2 3)"});
  CHECK(intersect(A, A) == A);
  CHECK(intersect(A, sub(*S3, {"(1 2)"})).is_trivial());
  auto S4 = make("Sym(4)");
  const auto P = sylow(*S4, 2);
  const auto A4 = derived_subgroup(*S4);
  REQUIRE(A4.order() == 12);
  const auto V = intersect(P, A4);
  CHECK(V.order() == 4);
  CHECK(V == sub(*S4, {"(1 2)(3 4)", "(1 3)(2 4)"}));
}

TEST_CASE("intersect rejects different parents") {
  auto a = make("Sym(3)");
  auto b = make("Sym(3)");
  CHECK_THROWS(intersect(Subgroup::whole(*a), Subgroup::whole(*b)));
}

TEST_CASE("product examples") {
  auto S3 = make("Sym(3)");
  const auto A = sub(*S3, {"(1 2)"});
  auto p1 = product(A, Subgroup::trivial(*S3));
  CHECK(p1.size == 2);
  CHECK(p1.is_subgroup);
  auto p2 = product(A, sub(*S3, {"(1 3)"}));
  CHECK(p2.size == 4);
  CHECK_FALSE(p2.is_subgroup);
  auto p3 = product(A, sub(*S3, {"(1 2 3)"}));
  CHECK(p3.size == 6);
  CHECK(p3.is_subgroup);
}

TEST_CASE("normalizer and centralizer examples") {
  auto A5 = make("Alt(5)");
  CHECK(normalizer(*A5, sub(*A5, {"(1 2 3 4 5)"})).order() == 10);
  auto S4 = make("Sym(4)");
  const auto V = sub(*S4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  CHECK(normalizer(*S4, V).order() == 24);
  CHECK(center(*make("Quaternion8")).order() == 2);
  CHECK(center(*A5).is_trivial());
  auto S3 = make("Sym(3)");
  CHECK(centralizer(*S3, sub(*S3, {"(1 2 3)"})).order() == 3);
}

TEST_CASE("normalizer in the order-1875 example") {
  auto G = build(example_1875_expr());
  REQUIRE(G->order() == 1875);
  const auto a = span(*G, {G->generator(0)});
  CHECK(a.order() == 5);
  CHECK(G->order() / normalizer(*G, a).order() == 3);
}

TEST_CASE("normalizer and centralizer agree with brute force; Z <= C <= N") {
  for (const auto& entry : builtin_corpus(120)) {
    const Group& G = *entry.group;
    CAPTURE(entry.name);
    const auto Z = center(G);
    for (Elem a = 1; a < G.order(); a += 5) {
      const auto H = span(G, {a});
      const auto N = normalizer(G, H);
      const auto C = centralizer(G, H);
      CHECK(N.order() == testing::brute_normalizer_order(G, H));
      CHECK(C.order() == testing::brute_centralizer_order(G, H));
      CHECK(Z.is_subgroup_of(C));
      CHECK(C.is_subgroup_of(N));
      CHECK(H.is_subgroup_of(N));
      CHECK(G.order() % H.order() == 0);
      CHECK(H.contains(Group::identity()));
    }
  }
}

TEST_CASE("derived subgroup, lower central series, exponent") {
  CHECK(derived_subgroup(*make("Sym(3)")).order() == 3);
  auto D8 = make("Dihedral(8)");
  const auto lcs = lower_central_series(*D8);
  REQUIRE(lcs.size() == 3);
  CHECK(lcs[0].order() == 8);
  CHECK(lcs[1].order() == 2);
  CHECK(lcs[2].is_trivial());
  CHECK(exponent(Subgroup::whole(*make("Quaternion8"))) == 4);
  CHECK(exponent(Subgroup::whole(*make("Sym(4)"))) == 12);
}

TEST_CASE("maximal subgroups of p-groups") {
  auto V4 = make("ElemAbelian(2,2)");
  auto m = p_group_maximal_subgroups(Subgroup::whole(*V4), 2);
  CHECK(m.size() == 3);
  for (const auto& M : m) CHECK(M.order() == 2);
  auto Q8 = make("Quaternion8");
  m = p_group_maximal_subgroups(Subgroup::whole(*Q8), 2);
  CHECK(m.size() == 3);
  for (const auto& M : m) {
    CHECK(M.order() == 4);
    CHECK(is_cyclic(M));
  }
  m = p_group_maximal_subgroups(Subgroup::whole(*make("Cyclic(9)")), 3);
  REQUIRE(m.size() == 1);
  CHECK(m[0].order() == 3);
  CHECK_THROWS_AS(p_group_maximal_subgroups(Subgroup::whole(*make("Sym(3)")), 2), std::invalid_argument);
}

TEST_CASE("maximal subgroup count and Frattini containment") {
  for (auto expr : {"ElemAbelian(2,3)", "ElemAbelian(3,3)", "Direct(Cyclic(4),Cyclic(2))", "Dihedral(16)",
                    "Direct(Quaternion8,Cyclic(2))", "Direct(Cyclic(4),Cyclic(4))"}) {
    auto G = make(expr);
    CAPTURE(expr);
    const auto P = Subgroup::whole(*G);
    const std::uint64_t p = prime_power_base(G->order());
    const auto phi = frattini_p(P, p);
    std::uint64_t d = 0;
    for (std::size_t q = G->order() / phi.order(); q > 1; q /= p) ++d;
    std::uint64_t expected = 0;
    for (std::uint64_t k = 0, pk = 1; k < d; ++k, pk *= p) expected += pk;
    const auto maxes = p_group_maximal_subgroups(P, p);
    CHECK(maxes.size() == expected);
    for (const auto& M : maxes) CHECK(phi.is_subgroup_of(M));
  }
}

TEST_CASE("frattini examples") {
  CHECK(frattini_p(Subgroup::whole(*make("ElemAbelian(3,2)")), 3).is_trivial());
  CHECK(frattini_p(Subgroup::whole(*make("Quaternion8")), 2).order() == 2);
  CHECK(frattini_p(Subgroup::whole(*make("Cyclic(8)")), 2).order() == 4);
}

TEST_CASE("omega examples") {
  auto E = make("ElemAbelian(2,3)");
  CHECK(omega(Subgroup::whole(*E), 2).order() == 8);
  CHECK(omega(Subgroup::whole(*make("Quaternion8")), 2).order() == 8);
  CHECK(omega(Subgroup::whole(*make("Direct(Cyclic(4),Cyclic(2))")), 2).order() == 4);
  CHECK(omega(Subgroup::whole(*make("Cyclic(9)")), 3).order() == 3);
}

TEST_CASE("cyclic subgroups of order p or 4") {
  CHECK(cyclic_subgroups_of_order(Subgroup::whole(*make("ElemAbelian(2,2)")), 2, 2).size() == 3);
  CHECK(cyclic_subgroups_of_order(Subgroup::whole(*make("Cyclic(5)")), 5, 5).size() == 1);
  CHECK(cyclic_subgroups_of_order(Subgroup::whole(*make("Quaternion8")), 2, 4).size() == 3);
  CHECK(cyclic_subgroups_of_order(Subgroup::whole(*make("Dihedral(8)")), 2, 2).size() == 5);
  CHECK_THROWS_AS(cyclic_subgroups_of_order(Subgroup::whole(*make("Cyclic(9)")), 3, 4), std::invalid_argument);
}

TEST_CASE("number helpers") {
  CHECK(p_part(60, 2) == 4);
  CHECK(p_part(60, 7) == 1);
  CHECK(is_pi_number(1, {}));
  const std::vector<std::uint64_t> five{5};
  CHECK_FALSE(is_pi_number(6, five));
  CHECK(is_pi_number(25, five));
  CHECK(is_p_number(1, 3));
  CHECK(prime_divisors(60) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(prime_power_base(27) == 3);
  CHECK(prime_power_base(12) == 0);
  CHECK(prime_power_base(1) == 0);
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
}

// Exponent of Omega for p-groups of class at most 2 with x^p central.
TEST_CASE("omega exponent on small p-groups of class two") {
  for (const auto& entry : builtin_corpus(400)) {
    const Group& G = *entry.group;
    const std::uint64_t p = prime_power_base(G.order());
    if (p == 0) continue;
    const auto P = Subgroup::whole(G);
    const auto lcs = lower_central_series(G);
    if (!lcs.back().is_trivial() || lcs.size() > 3) continue;
    const auto Z = center(G);
    bool powers_central = true;
    for (Elem x = 0; x < G.order(); ++x) powers_central = powers_central && Z.contains(G.pow(x, p));
    if (!powers_central) continue;
    CAPTURE(entry.name);
    const std::size_t e = exponent(omega(P, p));
    if (p > 2) {
      CHECK(e == p);
    } else if (!is_abelian(P)) {
      CHECK(e == 4);
    }
  }
}
