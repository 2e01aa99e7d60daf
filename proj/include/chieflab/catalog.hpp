#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chieflab/group.hpp"

namespace chieflab {

struct GroupExpr;
using GroupExprPtr = std::shared_ptr<const GroupExpr>;

namespace expr {

struct Cyclic {
  std::size_t n;
};
struct Sym {
  std::size_t n;
};
struct Alt {
  std::size_t n;
};
struct Dihedral {
  std::size_t order;
};
struct Quaternion8 {};
struct ElemAbelian {
  std::size_t p;
  std::size_t k;
};
struct SL23 {};
struct Direct {
  GroupExprPtr left;
  GroupExprPtr right;
};
/// Normal factor generators are named g1..gk in construction order. One
/// action string per complement generator, e.g. "g1->g2, g2->g1^-1*g2^-1".
struct Semidirect {
  GroupExprPtr normal;
  GroupExprPtr complement;
  std::vector<std::string> actions;
};
struct Perm {
  std::size_t degree;
  std::vector<std::string> cycles;
};

}  // namespace expr

struct GroupExpr {
  std::variant<expr::Cyclic, expr::Sym, expr::Alt, expr::Dihedral, expr::Quaternion8, expr::ElemAbelian,
               expr::SL23, expr::Direct, expr::Semidirect, expr::Perm>
      node;

  std::string to_string() const;
};

template <class T>
GroupExprPtr make_expr(T node) {
  return std::make_shared<const GroupExpr>(GroupExpr{std::move(node)});
}

/// Parses the construction grammar, e.g. "Direct(Cyclic(2), Sym(3))".
/// Throws ParseError with the character offset.
GroupExpr parse_expr(std::string_view text);

/// Builds a faithful permutation group. Direct products act on disjoint
/// point sets; semidirect products act on the elements of the normal
/// factor (translations plus automorphisms). Warnings (such as a
/// non-faithful action whose kernel is dropped) are appended to `warnings`.
GroupPtr build(const GroupExpr& e, std::size_t cap = Group::kDefaultCap,
               std::vector<std::string>* warnings = nullptr);

struct GroupFile {
  std::string name;
  GroupExpr expr;
};

/// Line-oriented group file: `#` comments, optional `group <name>`, then
/// `degree <n>` with `gen <cycles>` lines, or a single `expr <construction>`.
/// Throws ParseError carrying the 1-based line number.
GroupFile parse_group_file(std::string_view text);

struct CorpusEntry {
  std::string name;
  GroupExpr expr;
  GroupPtr group;
};

inline constexpr std::string_view kExampleGroupName = "(C5^2xC5^2):C3";
/// The order-1875 group (L1 x L2) x| <alpha> with alpha: a->b, b->a^-1 b^-1
/// acting diagonally on both copies.
GroupExpr example_1875_expr();

/// Deterministic built-in list filtered to order <= max_order; the
/// order-1875 example is appended only when requested.
std::vector<CorpusEntry> builtin_corpus(std::size_t max_order, bool include_example_1875 = false);

}  // namespace chieflab
