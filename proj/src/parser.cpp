#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "httparam/syntax.hpp"

namespace httparam {

namespace {

constexpr std::string_view kKeywords[] = {
    "def",   "axiom", "fun",    "U",    "Type", "Id",     "refl",      "J",
    "Empty", "Unit",  "star",   "Two",  "two0", "two1",   "Nat",       "zero",
    "suc",   "Circle", "base",  "loop", "emptyElim", "unitElim", "twoElim",
    "natElim", "circElim"};

enum class Tok { Ident, LParen, RParen, Comma, Colon, Define, Arrow, FatArrow, Star, Proj1,
                 Proj2, End };

struct Token {
  Tok tok;
  std::string text;
  Span span;
};

std::string describe(const Token& t) {
  switch (t.tok) {
    case Tok::Ident: return "'" + t.text + "'";
    case Tok::End: return "end of input";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto ident_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (src.substr(i, 2) == "--") {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Span here{line, col};
    auto sym = [&](Tok t, std::size_t n) {
      out.push_back({t, std::string(src.substr(i, n)), here});
      advance(n);
    };
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      sym(Tok::Ident, j - i);
    } else if (c == '(') {
      sym(Tok::LParen, 1);
    } else if (c == ')') {
      sym(Tok::RParen, 1);
    } else if (c == ',') {
      sym(Tok::Comma, 1);
    } else if (src.substr(i, 2) == ":=") {
      sym(Tok::Define, 2);
    } else if (c == ':') {
      sym(Tok::Colon, 1);
    } else if (src.substr(i, 2) == "->") {
      sym(Tok::Arrow, 2);
    } else if (src.substr(i, 2) == "=>") {
      sym(Tok::FatArrow, 2);
    } else if (c == '*') {
      sym(Tok::Star, 1);
    } else if (src.substr(i, 2) == ".1") {
      sym(Tok::Proj1, 2);
    } else if (src.substr(i, 2) == ".2") {
      sym(Tok::Proj2, 2);
    } else {
      std::ostringstream msg;
      msg << "unexpected character '" << c << "'";
      throw ParseError("lexical", here, msg.str());
    }
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

// Keywords that take a fixed number of atomic arguments.
std::optional<Kind> prefix_former(std::string_view w) {
  if (w == "suc") return Kind::Suc;
  if (w == "refl") return Kind::Refl;
  if (w == "Id") return Kind::Id;
  if (w == "J") return Kind::J;
  if (w == "emptyElim") return Kind::EmptyElim;
  if (w == "unitElim") return Kind::UnitElim;
  if (w == "twoElim") return Kind::TwoElim;
  if (w == "natElim") return Kind::NatElim;
  if (w == "circElim") return Kind::CircElim;
  return std::nullopt;
}

std::optional<Kind> nullary(std::string_view w) {
  if (w == "U") return Kind::U;
  if (w == "Type") return Kind::Type;
  if (w == "Empty") return Kind::Empty;
  if (w == "Unit") return Kind::Unit;
  if (w == "star") return Kind::Star;
  if (w == "Two") return Kind::Two;
  if (w == "two0") return Kind::Two0;
  if (w == "two1") return Kind::Two1;
  if (w == "Nat") return Kind::Nat;
  if (w == "zero") return Kind::Zero;
  if (w == "Circle") return Kind::Circle;
  if (w == "base") return Kind::Base;
  if (w == "loop") return Kind::Loop;
  return std::nullopt;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, std::vector<std::string> scope)
      : toks_(std::move(toks)), scope_(std::move(scope)) {}

  SourceFile file(std::string path) {
    SourceFile out{std::move(path), {}};
    std::set<std::string> seen;
    while (peek().tok != Tok::End) {
      Declaration d = declaration();
      if (!seen.insert(d.name).second)
        throw ParseError("duplicate", d.span, "duplicate declaration '" + d.name + "'");
      out.decls.push_back(std::move(d));
    }
    return out;
  }

  Term whole_term() {
    Term t = expr();
    expect(Tok::End, "end of input");
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  Token take() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool at_word(std::string_view w) const {
    return peek().tok == Tok::Ident && peek().text == w;
  }
  [[noreturn]] void fail(const Token& at, const std::string& wanted) const {
    throw ParseError("syntax", at.span, "expected " + wanted + ", found " + describe(at));
  }
  Token expect(Tok t, const std::string& wanted) {
    if (peek().tok != t) fail(peek(), wanted);
    return take();
  }
  std::string binder_name() {
    const Token& t = peek();
    if (t.tok != Tok::Ident || is_keyword(t.text)) fail(t, "a binder name");
    return take().text;
  }

  Declaration declaration() {
    Declaration d;
    Token head = peek();
    d.span = head.span;
    if (at_word("def")) {
      take();
      d.kind = DeclKind::Definition;
    } else if (at_word("axiom")) {
      take();
      d.kind = DeclKind::Axiom;
    } else {
      fail(head, "'def' or 'axiom'");
    }
    d.name = binder_name();
    if (d.name == "_") fail(head, "a declaration name");
    expect(Tok::Colon, "':'");
    d.type = expr();
    if (d.kind == DeclKind::Definition) {
      expect(Tok::Define, "':='");
      d.body = expr();
    }
    return d;
  }

  Term expr() {
    const Token start = peek();
    if (at_word("fun")) {
      take();
      std::vector<std::string> names;
      do names.push_back(binder_name());
      while (peek().tok == Tok::Ident);
      expect(Tok::FatArrow, "'=>'");
      for (const auto& n : names) scope_.push_back(n);
      Term body = expr();
      scope_.resize(scope_.size() - names.size());
      for (auto it = names.rbegin(); it != names.rend(); ++it) body = lam(*it, std::move(body));
      return body.with_span(start.span);
    }
    Term lhs = product();
    if (peek().tok == Tok::Arrow) {
      take();
      scope_.push_back("_");
      Term rhs = expr();
      scope_.pop_back();
      return Term::make(Kind::Pi, "_", {lhs, rhs}, 0, start.span);
    }
    return lhs;
  }

  // `*` binds tighter than `->`; both associate to the right.
  Term product() {
    const Token start = peek();
    if (auto group = try_binder_group()) return *group;
    Term lhs = app_expr();
    if (peek().tok == Tok::Star) {
      take();
      scope_.push_back("_");
      Term rhs = product();
      scope_.pop_back();
      return Term::make(Kind::Sigma, "_", {lhs, rhs}, 0, start.span);
    }
    return lhs;
  }

  bool at_binder_group() const {
    if (peek().tok != Tok::LParen) return false;
    std::size_t k = 1;
    while (peek(k).tok == Tok::Ident && !is_keyword(peek(k).text)) ++k;
    return k > 1 && peek(k).tok == Tok::Colon;
  }

  // `(x y : A) (z : B) -> C` or `(x : A) * B`. The body of a Pi group
  // extends as far as possible, that of a Sigma group to the next `->`.
  // A chain of several groups is only allowed before `->`.
  std::optional<Term> try_binder_group() {
    if (!at_binder_group()) return std::nullopt;
    struct Group {
      Span at;
      std::vector<std::string> names;
      Term dom;
    };
    std::vector<Group> groups;
    std::size_t bound = 0;
    do {
      Group g;
      g.at = take().span;
      while (peek().tok == Tok::Ident) g.names.push_back(take().text);
      expect(Tok::Colon, "':'");
      g.dom = expr();
      expect(Tok::RParen, "')'");
      for (const auto& n : g.names) scope_.push_back(n);
      bound += g.names.size();
      groups.push_back(std::move(g));
    } while (at_binder_group());
    Kind k2;
    if (peek().tok == Tok::Arrow) {
      k2 = Kind::Pi;
    } else if (peek().tok == Tok::Star && groups.size() == 1) {
      k2 = Kind::Sigma;
    } else {
      fail(peek(), groups.size() == 1 ? "'->' or '*' after a binder group" : "'->' after binder groups");
    }
    take();
    Term body = k2 == Kind::Pi ? expr() : product();
    scope_.resize(scope_.size() - bound);
    for (std::size_t gi = groups.size(); gi-- > 0;) {
      const Group& g = groups[gi];
      for (std::size_t i = g.names.size(); i-- > 0;)
        body = Term::make(k2, g.names[i], {shift(g.dom, static_cast<std::ptrdiff_t>(i)), body}, 0,
                          g.at);
    }
    return body;
  }

  bool starts_atom() const {
    const Token& t = peek();
    if (t.tok == Tok::LParen) return true;
    if (t.tok != Tok::Ident) return false;
    if (t.text == "fun" || t.text == "def" || t.text == "axiom") return false;
    return !prefix_former(t.text);
  }

  Term app_expr() {
    const Token head = peek();
    Term fn;
    if (head.tok == Tok::Ident && prefix_former(head.text)) {
      take();
      const Kind k = *prefix_former(head.text);
      std::vector<Term> args;
      for (std::size_t i = 0; i < arity_of(k); ++i) {
        if (!starts_atom()) fail(peek(), "an argument to '" + head.text + "'");
        args.push_back(postfix());
      }
      fn = Term::make(k, "", std::move(args), 0, head.span);
    } else {
      fn = postfix();
    }
    while (starts_atom()) fn = Term::make(Kind::App, "", {fn, postfix()}, 0, head.span);
    return fn;
  }

  Term postfix() {
    Term t = atom();
    while (peek().tok == Tok::Proj1 || peek().tok == Tok::Proj2) {
      const Token p = take();
      t = Term::make(p.tok == Tok::Proj1 ? Kind::Fst : Kind::Snd, "", {t}, 0, p.span);
    }
    return t;
  }

  Term atom() {
    const Token t = peek();
    if (t.tok == Tok::LParen) {
      take();
      Term inner = expr();
      if (peek().tok == Tok::Comma) {
        take();
        Term second = expr();
        expect(Tok::RParen, "')'");
        return Term::make(Kind::Pair, "", {inner, second}, 0, t.span);
      }
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.tok != Tok::Ident) fail(t, "a term");
    if (auto k = nullary(t.text)) {
      take();
      return Term::make(*k, "", {}, 0, t.span);
    }
    if (is_keyword(t.text) || t.text == "_") fail(t, "a term");
    take();
    for (std::size_t i = scope_.size(); i-- > 0;) {
      if (scope_[i] == t.text)
        return Term::make(Kind::Var, t.text, {}, scope_.size() - 1 - i, t.span);
    }
    return Term::make(Kind::Const, t.text, {}, 0, t.span);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;
};

}  // namespace

bool is_keyword(std::string_view word) {
  for (auto k : kKeywords)
    if (k == word) return true;
  return false;
}

SourceFile parse(std::string_view text, std::string path) {
  return Parser(lex(text), {}).file(std::move(path));
}

Term parse_term(std::string_view text, const std::vector<std::string>& scope) {
  return Parser(lex(text), scope).whole_term();
}

}  // namespace httparam
