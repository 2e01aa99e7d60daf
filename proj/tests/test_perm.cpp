#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chieflab/errors.hpp"
#include "support.hpp"

using namespace chieflab;
using testing::el;

TEST_CASE("parse_cycles examples") {
  CHECK(parse_cycles("(1 2)", 3).one_based() == std::vector<Point>{2, 1, 3});
  CHECK(parse_cycles("", 4).one_based() == std::vector<Point>{1, 2, 3, 4});
  CHECK(parse_cycles("(1 2 3 4 5)", 5).one_based() == std::vector<Point>{2, 3, 4, 5, 1});
  CHECK(parse_cycles("(1 2 3)(4 5)", 5).one_based() == std::vector<Point>{2, 3, 1, 5, 4});
  CHECK(parse_cycles("  (1,3) ", 3).one_based() == std::vector<Point>{3, 2, 1});
}

TEST_CASE("parse_cycles errors carry offsets") {
  auto offset_of = [](std::string_view text, std::size_t degree) -> std::size_t {
    try {
      parse_cycles(text, degree);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(offset_of("(1 7)", 5) == 3);
  CHECK(offset_of("(1 2 1)", 5) == 5);
  CHECK(offset_of("(1 2", 5) != std::string::npos);
  CHECK(offset_of("1 2)", 5) == 0);
  CHECK(offset_of("(1 2)(2 3)", 5) != std::string::npos);
  CHECK_THROWS_AS(parse_cycles("(0 1)", 3), ParseError);
}

TEST_CASE("to_cycles round trip") {
  for (auto text : {"()", "(1 2)", "(1 2 3)(4 5)", "(1 5 3 7)(2 8 4 6)"}) {
    const auto p = parse_cycles(text == std::string("()") ? "" : text, 8);
    CHECK(parse_cycles(p.to_cycles() == "()" ? "" : p.to_cycles(), 8) == p);
  }
  CHECK(parse_cycles("(3 1 2)", 3).to_cycles() == "(1 2 3)");
}

TEST_CASE("from_images rejects non-bijections") {
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_images({0, 3}), std::invalid_argument);
  CHECK_NOTHROW(Permutation::from_images({2, 0, 1}));
}

TEST_CASE("product composes left to right") {
  const auto a = parse_cycles("(1 2)", 3);
  const auto b = parse_cycles("(2 3)", 3);
  // 1 -a-> 2 -b-> 3
  CHECK((a * b)[0] == 2);
  CHECK((a * b) == parse_cycles("(1 3 2)", 3));
}

TEST_CASE("generate_group examples") {
  auto S3 = Group::generate({parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)}, 3);
  CHECK(S3->order() == 6);
  auto A5 = Group::generate({parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)}, 5);
  CHECK(A5->order() == 60);
  auto T = Group::generate({}, 4);
  CHECK(T->order() == 1);
  CHECK(S3->element(0).is_identity());
  for (std::size_t i = 0; i < S3->generator_count(); ++i) {
    CHECK(S3->element(S3->generator(i)) == S3->generator_perms()[i]);
  }
}

TEST_CASE("generate_group cap") {
  try {
    Group::generate({parse_cycles("(1 2)", 6), parse_cycles("(1 2 3 4 5 6)", 6)}, 6, 100);
    FAIL("expected a resource cap error");
  } catch (const ResourceCapError& e) {
    CHECK(e.reached() > 100);
  }
}

TEST_CASE("generation is deterministic") {
  auto a = testing::make("Sym(4)");
  auto b = testing::make("Sym(4)");
  REQUIRE(a->order() == b->order());
  for (Elem x = 0; x < a->order(); ++x) CHECK(a->element(x) == b->element(x));
}

TEST_CASE("element_order examples") {
  auto A5 = testing::make("Alt(5)");
  CHECK(A5->element_order(Group::identity()) == 1);
  CHECK(A5->element_order(el(*A5, "(1 2 3 4 5)")) == 5);
  auto A4 = testing::make("Alt(4)");
  CHECK(A4->element_order(el(*A4, "(1 2)(3 4)")) == 2);
}

TEST_CASE("conjugacy class examples") {
  auto sizes = [](const Group& G) {
    std::vector<std::size_t> s;
    for (const auto& c : G.conjugacy_classes()) s.push_back(c.size());
    return testing::sorted(s);
  };
  CHECK(sizes(*testing::make("Alt(5)")) == std::vector<std::size_t>{1, 12, 12, 15, 20});
  CHECK(sizes(*testing::make("Sym(3)")) == std::vector<std::size_t>{1, 2, 3});
  auto C12 = testing::make("Cyclic(12)");
  CHECK(C12->conjugacy_classes().size() == 12);
  CHECK(C12->conjugacy_classes().front() == std::vector<Elem>{0});
}

TEST_CASE("group axioms on the corpus") {
  std::mt19937 rng(7);
  for (const auto& entry : builtin_corpus(200)) {
    const Group& G = *entry.group;
    CAPTURE(entry.name);
    // order divides degree!
    std::uint64_t f = 1;
    bool divides = false;
    for (std::size_t k = 1; k <= G.degree() && !divides; ++k) {
      f *= k;
      if (f % G.order() == 0) divides = true;
      if (f > (1ull << 60)) divides = true;  // degree! is astronomically divisible
    }
    CHECK(divides);
    std::size_t classes = 0;
    for (const auto& c : G.conjugacy_classes()) {
      CHECK(G.order() % c.size() == 0);
      classes += c.size();
    }
    CHECK(classes == G.order());
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(G.order() - 1));
    for (int t = 0; t < 50; ++t) {
      const Elem g = pick(rng), h = pick(rng);
      CHECK(G.mul(g, G.inv(g)) == Group::identity());
      CHECK(G.mul(G.mul(g, h), G.inv(h)) == g);
      CHECK(G.element(G.mul(g, h)) == G.element(g) * G.element(h));
    }
  }
}

TEST_CASE("closure over all pairs for a mid-size group") {
  auto G = testing::make("Sym(5)");
  for (Elem a = 0; a < G->order(); ++a) {
    for (Elem b = 0; b < G->order(); ++b) {
      REQUIRE(G->index_of(G->element(a) * G->element(b)).has_value());
    }
  }
}
