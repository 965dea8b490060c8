#include <doctest.h>

#include "support.hpp"

using namespace httparam;

namespace {

void round_trip(const Term& t, const std::vector<std::string>& scope = {}) {
  const std::string text = print(t, scope);
  INFO(text);
  Term back = parse_term(text, scope);
  CHECK(alpha_equal(back, t));
}

}  // namespace

TEST_CASE("parse: reference examples") {
  SourceFile f = parse("def id : (X : U) -> X -> X := fun X => fun x => x");
  REQUIRE(f.decls.size() == 1);
  CHECK(f.decls[0].kind == DeclKind::Definition);
  CHECK(f.decls[0].type.kind() == Kind::Pi);
  CHECK(f.decls[0].body->kind() == Kind::Lam);
  CHECK(alpha_equal(*f.decls[0].body, lam("X", lam("x", var(0)))));

  SourceFile g = parse("axiom t : (X : U) -> X -> X");
  REQUIRE(g.decls.size() == 1);
  CHECK(g.decls[0].kind == DeclKind::Axiom);
  CHECK_FALSE(g.decls[0].body.has_value());

  SourceFile h = parse("def bad : U := U");
  REQUIRE(h.decls.size() == 1);
  CHECK(h.decls[0].body->kind() == Kind::U);
}

TEST_CASE("parse: binders, products and precedence") {
  Term t = parse_term("(x y : Nat) -> Id Nat x y");
  CHECK(alpha_equal(t, pi("x", simple(Kind::Nat), pi("y", simple(Kind::Nat),
                                                      id_type(simple(Kind::Nat), var(1), var(0))))));
  // `*` binds tighter than `->`, and both associate to the right.
  Term p = parse_term("Nat * Nat -> Unit * Two * Nat");
  REQUIRE(p.kind() == Kind::Pi);
  CHECK(p.arg(0).kind() == Kind::Sigma);
  REQUIRE(p.arg(1).kind() == Kind::Sigma);
  CHECK(p.arg(1).arg(1).kind() == Kind::Sigma);
  Term q = parse_term("(x : Nat) * Id Nat x x -> Unit");
  REQUIRE(q.kind() == Kind::Pi);
  CHECK(q.arg(0).kind() == Kind::Sigma);

  Term proj = parse_term("f (a, b).1 c.2", {"f", "a", "b", "c"});
  CHECK(alpha_equal(proj, app(app(var(3), fst(pair(var(2), var(1)))), snd(var(0)))));
  Term kw = parse_term("suc (suc zero)");
  CHECK(alpha_equal(kw, suc(suc(simple(Kind::Zero)))));
  Term j = parse_term("J m d a b p x", {"m", "d", "a", "b", "p", "x"});
  CHECK(alpha_equal(j, app(j_elim(var(5), var(4), var(3), var(2), var(1)), var(0))));
  CHECK(parse_term("foo").kind() == Kind::Const);
}

TEST_CASE("parse: errors") {
  auto kind_of = [](const std::string& text) {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    return std::string("none");
  };
  CHECK(kind_of("def x : U := #") == "lexical");
  CHECK(kind_of("def x : U :=") == "syntax");
  CHECK(kind_of("def : U := U") == "syntax");
  CHECK(kind_of("def x : (y : U) := U") == "syntax");
  CHECK(kind_of("axiom a : U\naxiom a : U") == "duplicate");
  CHECK(kind_of("-- only a comment\n") == "none");
  try {
    parse("def x : U :=\n  (U");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.span().line == 2);
  }
}

TEST_CASE("print: reference examples") {
  CHECK(print(lam("x", var(0))) == "fun x => x");
  CHECK(print(pi("_", simple(Kind::Nat), simple(Kind::Nat))) == "Nat -> Nat");
  CHECK(print(sigma("_", pi("_", simple(Kind::Nat), simple(Kind::Nat)), simple(Kind::Nat))) ==
        "(Nat -> Nat) * Nat");
  CHECK(print(pi("_", sigma("_", simple(Kind::Nat), simple(Kind::Nat)), simple(Kind::Nat))) ==
        "Nat * Nat -> Nat");
  CHECK(print(app(constant("f"), suc(simple(Kind::Zero)))) == "f (suc zero)");
  // A binder that would capture a free name is renamed.
  CHECK(print(lam("x", app(var(1), var(0))), {"x"}) == "fun x1 => x x1");
  CHECK(print(lam("_", var(0))) == "fun x => x");
}

TEST_CASE("round trip on the corpus") {
  std::vector<std::string> stems = support::plain_corpus();
  stems.push_back("circle_use");
  stems.push_back("univalence");
  std::size_t count = 0;
  for (const auto& stem : stems) {
    for (const auto& d : support::parse_corpus(stem).decls) {
      round_trip(d.type);
      if (d.body) round_trip(*d.body);
      SourceFile again = parse(print_decl(d));
      REQUIRE(again.decls.size() == 1);
      CHECK(again.decls[0].name == d.name);
      CHECK(alpha_equal(again.decls[0].type, d.type));
      ++count;
    }
  }
  CHECK(count >= 40);
  SourceFile basis = parse(read_file(support::basis_file()));
  for (const auto& d : basis.decls) {
    round_trip(d.type);
    if (d.body) round_trip(*d.body);
  }
}

TEST_CASE("round trip on 1000 random terms") {
  support::TermGen gen(2024);
  const std::vector<std::string> scope{"a", "b", "c"};
  for (int i = 0; i < 1000; ++i) {
    Term t = gen.gen(1 + gen.pick(12), scope.size());
    REQUIRE(term_size(t) <= 12);
    round_trip(t, scope);
  }
}

TEST_CASE("printing distinguishes distinct corpus types") {
  std::vector<Term> types;
  for (const auto& stem : support::plain_corpus())
    for (const auto& d : support::parse_corpus(stem).decls) types.push_back(d.type);
  for (std::size_t i = 0; i < types.size(); ++i)
    for (std::size_t j = i + 1; j < types.size(); ++j)
      if (!alpha_equal(types[i], types[j])) CHECK(print(types[i]) != print(types[j]));
}
