#include "chieflab/catalog.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>

#include "chieflab/errors.hpp"
#include "chieflab/subgroup.hpp"

namespace chieflab {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string GroupExpr::to_string() const {
  return std::visit(
      Overloaded{
          [](const expr::Cyclic& c) { return "Cyclic(" + std::to_string(c.n) + ")"; },
          [](const expr::Sym& s) { return "Sym(" + std::to_string(s.n) + ")"; },
          [](const expr::Alt& a) { return "Alt(" + std::to_string(a.n) + ")"; },
          [](const expr::Dihedral& d) { return "Dihedral(" + std::to_string(d.order) + ")"; },
          [](const expr::Quaternion8&) { return std::string("Quaternion8"); },
          [](const expr::ElemAbelian& e) {
            return "ElemAbelian(" + std::to_string(e.p) + ", " + std::to_string(e.k) + ")";
          },
          [](const expr::SL23&) { return std::string("SL23"); },
          [](const expr::Direct& d) { return "Direct(" + d.left->to_string() + ", " + d.right->to_string() + ")"; },
          [](const expr::Semidirect& s) {
            std::string out = "Semidirect(" + s.normal->to_string() + ", " + s.complement->to_string();
            for (const auto& a : s.actions) out += ", " + quote(a);
            return out + ")";
          },
          [](const expr::Perm& p) {
            std::string out = "Perm(" + std::to_string(p.degree);
            for (const auto& c : p.cycles) out += ", " + quote(c);
            return out + ")";
          },
      },
      node);
}

// ---------------------------------------------------------------------------
// Construction grammar

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  GroupExpr parse_all() {
    GroupExpr e = parse();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  struct Arg {
    std::size_t offset;
    std::variant<std::size_t, std::string, GroupExprPtr> value;
  };

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a constructor name");
    return std::string(text_.substr(start, pos_ - start));
  }

  Arg argument() {
    skip();
    Arg a{pos_, std::size_t{0}};
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '"') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
      if (pos_ >= text_.size()) fail("unterminated string");
      a.value = std::string(text_.substr(start, pos_ - start));
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
        if (v > 1000000) fail("integer too large");
        ++pos_;
      }
      a.value = v;
    } else {
      a.value = std::make_shared<const GroupExpr>(parse());
    }
    return a;
  }

  GroupExpr parse() {
    const std::size_t start = (skip(), pos_);
    const std::string name = identifier();
    std::vector<Arg> args;
    if (peek('(')) {
      ++pos_;
      if (!peek(')')) {
        args.push_back(argument());
        while (peek(',')) {
          ++pos_;
          args.push_back(argument());
        }
      }
      expect(')');
    }

    auto integer = [&](std::size_t i) {
      if (i >= args.size()) throw ParseError(name + ": missing integer argument", pos_);
      if (auto* v = std::get_if<std::size_t>(&args[i].value)) return *v;
      throw ParseError(name + ": expected an integer", args[i].offset);
    };
    auto group = [&](std::size_t i) {
      if (i >= args.size()) throw ParseError(name + ": missing group argument", pos_);
      if (auto* v = std::get_if<GroupExprPtr>(&args[i].value)) return *v;
      throw ParseError(name + ": expected a group expression", args[i].offset);
    };
    auto strings_from = [&](std::size_t first) {
      std::vector<std::string> out;
      for (std::size_t i = first; i < args.size(); ++i) {
        if (auto* v = std::get_if<std::string>(&args[i].value)) {
          out.push_back(*v);
        } else {
          throw ParseError(name + ": expected a quoted string", args[i].offset);
        }
      }
      return out;
    };
    auto arity = [&](std::size_t n) {
      if (args.size() != n) {
        throw ParseError(name + " takes " + std::to_string(n) + " argument(s), got " + std::to_string(args.size()),
                         start);
      }
    };

    if (name == "Cyclic") return arity(1), GroupExpr{expr::Cyclic{integer(0)}};
    if (name == "Sym") return arity(1), GroupExpr{expr::Sym{integer(0)}};
    if (name == "Alt") return arity(1), GroupExpr{expr::Alt{integer(0)}};
    if (name == "Dihedral") return arity(1), GroupExpr{expr::Dihedral{integer(0)}};
    if (name == "Quaternion8") return arity(0), GroupExpr{expr::Quaternion8{}};
    if (name == "SL23") return arity(0), GroupExpr{expr::SL23{}};
    if (name == "ElemAbelian") return arity(2), GroupExpr{expr::ElemAbelian{integer(0), integer(1)}};
    if (name == "Direct") return arity(2), GroupExpr{expr::Direct{group(0), group(1)}};
    if (name == "Semidirect") {
      if (args.size() < 2) throw ParseError("Semidirect needs a normal factor and a complement", start);
      return GroupExpr{expr::Semidirect{group(0), group(1), strings_from(2)}};
    }
    if (name == "Perm") {
      if (args.empty()) throw ParseError("Perm needs a degree", start);
      return GroupExpr{expr::Perm{integer(0), strings_from(1)}};
    }
    throw ParseError("unknown constructor '" + name + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupExpr parse_expr(std::string_view text) { return ExprParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Action words

namespace {

std::string normalize_unicode(std::string s) {
  auto replace = [&](const std::string& from, const std::string& to) {
    for (std::size_t at = s.find(from); at != std::string::npos; at = s.find(from, at + to.size())) {
      s.replace(at, from.size(), to);
    }
  };
  replace("\xE2\x86\x92", "->");        // rightwards arrow
  replace("\xE2\x81\xBB\xC2\xB9", "^-1");  // superscript minus one
  return s;
}

// word := factor ('*'? factor)* ; factor := atom ('^' '-'? int)? ; atom := gN | 1 | '(' word ')'
class WordParser {
 public:
  WordParser(const Group& N, std::string_view text, std::size_t base)
      : N_(N), text_(text), base_(base) {}

  Elem parse_word() {
    Elem acc = Group::identity();
    bool any = false;
    for (;;) {
      skip();
      if (pos_ >= text_.size() || text_[pos_] == ')') break;
      if (text_[pos_] == '*') {
        if (!any) fail("word starts with '*'");
        ++pos_;
        continue;
      }
      acc = N_.mul(acc, factor());
      any = true;
    }
    if (!any) fail("empty word");
    return acc;
  }

  std::size_t pos() const { return pos_; }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, base_ + pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  long long integer() {
    skip();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an exponent");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) fail("exponent too large");
      ++pos_;
    }
    return negative ? -v : v;
  }

  Elem atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of word");
    if (text_[pos_] == '(') {
      ++pos_;
      Elem inner = parse_word();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (text_[pos_] == '1') {
      ++pos_;
      return Group::identity();
    }
    if (text_[pos_] != 'g') fail("expected a generator name g1..gk");
    ++pos_;
    long long index = integer();
    if (index < 1 || static_cast<std::size_t>(index) > N_.generator_count()) {
      fail("generator g" + std::to_string(index) + " out of range 1.." + std::to_string(N_.generator_count()));
    }
    return N_.generator(static_cast<std::size_t>(index - 1));
  }

  Elem factor() {
    Elem a = atom();
    skip();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      a = N_.pow(a, integer());
    }
    return a;
  }

  const Group& N_;
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

/// Images of the generators of N under one action string.
std::vector<Elem> parse_action(const Group& N, const std::string& raw) {
  const std::string text = normalize_unicode(raw);
  std::vector<Elem> images(N.generator_count());
  std::vector<bool> assigned(N.generator_count(), false);
  for (std::size_t g = 0; g < images.size(); ++g) images[g] = N.generator(g);

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string_view item = std::string_view(text).substr(start, end - start);
    if (item.find_first_not_of(" \t") != std::string_view::npos) {
      const std::size_t arrow = item.find("->");
      if (arrow == std::string_view::npos) throw ParseError("action entry without '->'", start);
      WordParser lhs(N, item.substr(0, arrow), start);
      Elem source = lhs.parse_word();
      std::size_t which = N.generator_count();
      for (std::size_t g = 0; g < N.generator_count(); ++g) {
        if (N.generator(g) == source) which = g;
      }
      if (which == N.generator_count()) throw ParseError("left side of an action entry must be a generator", start);
      if (assigned[which]) throw ParseError("generator g" + std::to_string(which + 1) + " mapped twice", start);
      WordParser rhs(N, item.substr(arrow + 2), start + arrow + 2);
      images[which] = rhs.parse_word();
      assigned[which] = true;
    }
    start = end + 1;
  }
  return images;
}

/// The automorphism of N determined by generator images, as a permutation
/// of N's element indices. Throws std::invalid_argument if the map does
/// not extend to an automorphism.
Permutation automorphism_of(const Group& N, const std::vector<Elem>& images, const std::string& text) {
  std::vector<Elem> phi(N.order());
  phi[0] = Group::identity();
  for (Elem x = 1; x < N.order(); ++x) phi[x] = N.mul(phi[N.bfs_parent(x)], images[N.bfs_via(x)]);
  for (Elem x = 0; x < N.order(); ++x) {
    for (std::size_t s = 0; s < N.generator_count(); ++s) {
      if (phi[N.right(x, s)] != N.mul(phi[x], images[s])) {
        throw std::invalid_argument("action \"" + text + "\" does not preserve the relations of the normal factor");
      }
    }
  }
  if (span(N, images).order() != N.order()) {
    throw std::invalid_argument("action \"" + text + "\" is not surjective");
  }
  std::vector<Point> pts(phi.begin(), phi.end());
  return Permutation::from_images(std::move(pts));
}

std::vector<Permutation> cycles_to_perms(std::size_t degree, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> out;
  for (const char* c : cycles) out.push_back(parse_cycles(c, degree));
  return out;
}

Permutation n_cycle(std::size_t degree, std::size_t length, std::size_t offset = 0) {
  std::vector<Point> images(degree);
  for (std::size_t k = 0; k < degree; ++k) images[k] = static_cast<Point>(k);
  for (std::size_t k = 0; k < length; ++k) images[offset + k] = static_cast<Point>(offset + (k + 1) % length);
  return Permutation::from_images(std::move(images));
}

GroupPtr trivial_group() { return Group::generate({}, 1); }

GroupPtr build_sl23(std::size_t cap) {
  // Right action v -> vM on the eight nonzero row vectors of F_3^2.
  std::vector<std::pair<int, int>> vectors;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a || b) vectors.emplace_back(a, b);
    }
  }
  auto index = [&](int a, int b) {
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i] == std::make_pair(a, b)) return static_cast<Point>(i);
    }
    throw std::logic_error("vector not found");
  };
  auto matrix = [&](int m00, int m01, int m10, int m11) {
    std::vector<Point> images;
    for (auto [a, b] : vectors) images.push_back(index((a * m00 + b * m10) % 3, (a * m01 + b * m11) % 3));
    return Permutation::from_images(std::move(images));
  };
  return Group::generate({matrix(1, 1, 0, 1), matrix(1, 0, 1, 1)}, 8, cap);
}

}  // namespace

GroupPtr build(const GroupExpr& e, std::size_t cap, std::vector<std::string>* warnings) {
  return std::visit(
      Overloaded{
          [&](const expr::Cyclic& c) -> GroupPtr {
            if (c.n < 1) throw std::invalid_argument("Cyclic(0)");
            if (c.n == 1) return trivial_group();
            return Group::generate({n_cycle(c.n, c.n)}, c.n, cap);
          },
          [&](const expr::Sym& s) -> GroupPtr {
            if (s.n < 1) throw std::invalid_argument("Sym(0)");
            if (s.n == 1) return trivial_group();
            std::vector<Permutation> gens{n_cycle(s.n, 2)};
            if (s.n > 2) gens.push_back(n_cycle(s.n, s.n));
            return Group::generate(gens, s.n, cap);
          },
          [&](const expr::Alt& a) -> GroupPtr {
            if (a.n < 1) throw std::invalid_argument("Alt(0)");
            if (a.n < 3) return Group::generate({}, a.n, cap);
            std::vector<Permutation> gens;
            for (std::size_t k = 3; k <= a.n; ++k) {
              gens.push_back(parse_cycles("(1 2 " + std::to_string(k) + ")", a.n));
            }
            return Group::generate(gens, a.n, cap);
          },
          [&](const expr::Dihedral& d) -> GroupPtr {
            if (d.order < 2 || d.order % 2) throw std::invalid_argument("Dihedral order must be even and positive");
            if (d.order == 2) return Group::generate({n_cycle(2, 2)}, 2, cap);
            if (d.order == 4) return Group::generate(cycles_to_perms(4, {"(1 2)", "(3 4)"}), 4, cap);
            const std::size_t m = d.order / 2;
            std::vector<Point> reflect(m);
            for (std::size_t k = 0; k < m; ++k) reflect[k] = static_cast<Point>(m - 1 - k);
            return Group::generate({n_cycle(m, m), Permutation::from_images(reflect)}, m, cap);
          },
          [&](const expr::Quaternion8&) -> GroupPtr {
            return Group::generate(cycles_to_perms(8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}), 8, cap);
          },
          [&](const expr::ElemAbelian& ea) -> GroupPtr {
            if (!is_prime(ea.p)) throw std::invalid_argument("ElemAbelian needs a prime");
            if (ea.k == 0) return trivial_group();
            const std::size_t degree = ea.p * ea.k;
            std::vector<Permutation> gens;
            for (std::size_t i = 0; i < ea.k; ++i) gens.push_back(n_cycle(degree, ea.p, i * ea.p));
            return Group::generate(gens, degree, cap);
          },
          [&](const expr::SL23&) -> GroupPtr { return build_sl23(cap); },
          [&](const expr::Direct& d) -> GroupPtr {
            const GroupPtr A = build(*d.left, cap, warnings);
            const GroupPtr B = build(*d.right, cap, warnings);
            const std::size_t degree = A->degree() + B->degree();
            std::vector<Permutation> gens;
            for (const auto& g : A->generator_perms()) {
              std::vector<Point> images = g.images();
              for (std::size_t k = 0; k < B->degree(); ++k) images.push_back(static_cast<Point>(A->degree() + k));
              gens.push_back(Permutation::from_images(std::move(images)));
            }
            for (const auto& g : B->generator_perms()) {
              std::vector<Point> images;
              for (std::size_t k = 0; k < A->degree(); ++k) images.push_back(static_cast<Point>(k));
              for (Point x : g.images()) images.push_back(static_cast<Point>(A->degree() + x));
              gens.push_back(Permutation::from_images(std::move(images)));
            }
            return Group::generate(gens, degree, cap);
          },
          [&](const expr::Semidirect& s) -> GroupPtr {
            const GroupPtr N = build(*s.normal, cap, warnings);
            const GroupPtr K = build(*s.complement, cap, warnings);
            if (s.actions.size() != K->generator_count()) {
              throw std::invalid_argument("Semidirect: " + std::to_string(K->generator_count()) +
                                          " complement generator(s) but " + std::to_string(s.actions.size()) +
                                          " action string(s)");
            }
            std::vector<Permutation> autos;
            for (const auto& a : s.actions) autos.push_back(automorphism_of(*N, parse_action(*N, a), a));

            // The assignment must extend to a homomorphism K -> Aut(N).
            std::vector<Permutation> psi(K->order());
            psi[0] = Permutation::identity(N->order());
            for (Elem x = 1; x < K->order(); ++x) psi[x] = psi[K->bfs_parent(x)] * autos[K->bfs_via(x)];
            for (Elem x = 0; x < K->order(); ++x) {
              for (std::size_t j = 0; j < K->generator_count(); ++j) {
                if (psi[K->right(x, j)] != psi[x] * autos[j]) {
                  throw std::invalid_argument("Semidirect: action does not respect the relations of the complement");
                }
              }
            }
            std::size_t kernel = 0;
            for (const auto& a : psi) kernel += a.is_identity() ? 1 : 0;
            if (kernel > 1 && warnings) {
              warnings->push_back("Semidirect: action has a kernel of order " + std::to_string(kernel) +
                                  "; building the quotient by it");
            }

            std::vector<Permutation> gens;
            for (Elem g : N->generator_indices()) {
              std::vector<Point> images(N->order());
              for (Elem x = 0; x < N->order(); ++x) images[x] = N->mul(x, g);
              gens.push_back(Permutation::from_images(std::move(images)));
            }
            for (auto& a : autos) gens.push_back(std::move(a));
            return Group::generate(gens, N->order(), cap);
          },
          [&](const expr::Perm& p) -> GroupPtr {
            if (p.degree < 1) throw std::invalid_argument("Perm degree must be positive");
            std::vector<Permutation> gens;
            for (const auto& c : p.cycles) gens.push_back(parse_cycles(c, p.degree));
            return Group::generate(gens, p.degree, cap);
          },
      },
      e.node);
}

// ---------------------------------------------------------------------------
// Group files

GroupFile parse_group_file(std::string_view text) {
  std::string name = "G";
  std::optional<std::size_t> degree;
  std::vector<std::string> gens;
  std::optional<GroupExpr> construction;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);

    const std::size_t split = line.find_first_of(" \t");
    const std::string keyword = line.substr(0, split);
    std::string rest = split == std::string::npos ? "" : line.substr(line.find_first_not_of(" \t", split));
    auto fail = [&](const std::string& what) -> ParseError {
      return ParseError("line " + std::to_string(line_no) + ": " + what, line_no);
    };

    if (keyword == "group") {
      if (rest.empty()) throw fail("group name missing");
      name = rest;
    } else if (keyword == "degree") {
      if (degree) throw fail("degree given twice");
      if (construction) throw fail("degree after expr");
      if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 7) {
        throw fail("degree must be a positive integer");
      }
      degree = std::stoul(rest);
      if (*degree == 0) throw fail("degree must be a positive integer");
    } else if (keyword == "gen") {
      if (!degree) throw fail("gen before degree");
      try {
        parse_cycles(rest, *degree);
      } catch (const ParseError& e) {
        throw fail(std::string(e.what()) + " (offset " + std::to_string(e.position()) + ")");
      }
      gens.push_back(rest);
    } else if (keyword == "expr") {
      if (construction) throw fail("expr given twice");
      if (degree) throw fail("expr cannot be combined with degree/gen");
      try {
        construction = parse_expr(rest);
      } catch (const ParseError& e) {
        throw fail(std::string(e.what()) + " (offset " + std::to_string(e.position()) + ")");
      }
    } else {
      throw fail("unknown keyword '" + keyword + "'");
    }
  }

  if (construction) return GroupFile{name, std::move(*construction)};
  if (!degree) throw ParseError("group file has neither 'degree' nor 'expr'", line_no);
  return GroupFile{name, GroupExpr{expr::Perm{*degree, std::move(gens)}}};
}

// ---------------------------------------------------------------------------
// Built-in corpus

GroupExpr example_1875_expr() {
  return parse_expr(
      "Semidirect(Direct(ElemAbelian(5, 2), ElemAbelian(5, 2)), Cyclic(3), "
      "\"g1->g2, g2->g1^-1*g2^-1, g3->g4, g4->g3^-1*g4^-1\")");
}

std::vector<CorpusEntry> builtin_corpus(std::size_t max_order, bool include_example_1875) {
  std::vector<std::pair<std::string, std::string>> specs;
  for (std::size_t n = 1; n <= 32; ++n) specs.emplace_back("C" + std::to_string(n), "Cyclic(" + std::to_string(n) + ")");
  for (auto [p, k] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}, {5, 3}}) {
    specs.emplace_back("C" + std::to_string(p) + "^" + std::to_string(k),
                       "ElemAbelian(" + std::to_string(p) + ", " + std::to_string(k) + ")");
  }
  for (std::size_t order = 6; order <= 32; order += 2) {
    specs.emplace_back("D" + std::to_string(order), "Dihedral(" + std::to_string(order) + ")");
  }
  const std::vector<std::pair<std::string, std::string>> named = {
      {"Q8", "Quaternion8"},
      {"C4xC2", "Direct(Cyclic(4), Cyclic(2))"},
      {"C4xC4", "Direct(Cyclic(4), Cyclic(4))"},
      {"Q8xC2", "Direct(Quaternion8, Cyclic(2))"},
      {"S3", "Sym(3)"},
      {"S4", "Sym(4)"},
      {"S5", "Sym(5)"},
      {"A4", "Alt(4)"},
      {"A5", "Alt(5)"},
      {"SL(2,3)", "SL23"},
      {"S3xC2", "Direct(Sym(3), Cyclic(2))"},
      {"S3xC3", "Direct(Sym(3), Cyclic(3))"},
      {"S3xS3", "Direct(Sym(3), Sym(3))"},
      {"A4xC2", "Direct(Alt(4), Cyclic(2))"},
      {"A4xC3", "Direct(Alt(4), Cyclic(3))"},
      {"S4xC2", "Direct(Sym(4), Cyclic(2))"},
      {"D8xC2", "Direct(Dihedral(8), Cyclic(2))"},
      {"A5xC2", "Direct(Alt(5), Cyclic(2))"},
      {"C7:C3", "Semidirect(Cyclic(7), Cyclic(3), \"g1->g1^2\")"},
      {"C5:C4", "Semidirect(Cyclic(5), Cyclic(4), \"g1->g1^2\")"},
      {"(C3xC3):C2", "Semidirect(ElemAbelian(3, 2), Cyclic(2), \"g1->g1^-1, g2->g2^-1\")"},
      {"C5^2:C3", "Semidirect(ElemAbelian(5, 2), Cyclic(3), \"g1->g2, g2->g1^-1*g2^-1\")"},
  };
  specs.insert(specs.end(), named.begin(), named.end());

  std::vector<CorpusEntry> out;
  for (const auto& [name, text] : specs) {
    GroupExpr e = parse_expr(text);
    GroupPtr G = build(e);
    if (G->order() <= max_order) out.push_back(CorpusEntry{name, std::move(e), std::move(G)});
  }
  if (include_example_1875) {
    GroupExpr e = example_1875_expr();
    GroupPtr G = build(e);
    out.push_back(CorpusEntry{std::string(kExampleGroupName), std::move(e), std::move(G)});
  }
  return out;
}

}  // namespace chieflab
