#include <doctest.h>

#include <map>
#include <set>

#include "support.hpp"

using namespace httparam;

namespace {

// Nameful mirror of Term: variables carry names, binders carry the name
// they bind. Used as an oracle independent of index arithmetic.
struct Named {
  Kind kind;
  std::string name;
  std::vector<Named> args;
};

struct Namer {
  int fresh = 0;
  Named to_named(const Term& t, std::vector<std::string>& ctx) {
    if (t.kind() == Kind::Var) return {Kind::Var, ctx[ctx.size() - 1 - t.index()], {}};
    Named n{t.kind(), t.kind() == Kind::Const ? t.name() : "", {}};
    const bool binds = t.kind() == Kind::Lam || t.kind() == Kind::Pi || t.kind() == Kind::Sigma;
    if (binds) n.name = "b" + std::to_string(fresh++);
    for (std::size_t i = 0; i < t.arity(); ++i) {
      const bool under = binders_at(t.kind(), i) == 1;
      if (under) ctx.push_back(n.name);
      n.args.push_back(to_named(t.arg(i), ctx));
      if (under) ctx.pop_back();
    }
    return n;
  }
};

// Binder names are globally fresh, so no capture can happen.
Named subst_named(const Named& t, const std::string& x, const Named& u) {
  if (t.kind == Kind::Var) return t.name == x ? u : t;
  Named out{t.kind, t.name, {}};
  for (const auto& a : t.args) out.args.push_back(subst_named(a, x, u));
  return out;
}

Term to_term(const Named& n, std::vector<std::string>& ctx) {
  if (n.kind == Kind::Var) {
    for (std::size_t i = ctx.size(); i-- > 0;)
      if (ctx[i] == n.name) return var(ctx.size() - 1 - i, n.name);
    FAIL("unscoped name " << n.name);
  }
  std::vector<Term> args;
  for (std::size_t i = 0; i < n.args.size(); ++i) {
    const bool under = binders_at(n.kind, i) == 1;
    if (under) ctx.push_back(n.name);
    args.push_back(to_term(n.args[i], ctx));
    if (under) ctx.pop_back();
  }
  return Term::make(n.kind, n.kind == Kind::Const ? n.name : "_", std::move(args));
}

// t lives in a context of `n` variables c0..c{n-1} (index i named c{n-1-i});
// u lives in the part of that context outside the variable at index k.
Term oracle_substitute(const Term& t, std::size_t k, const Term& u, std::size_t n) {
  Namer namer;
  std::vector<std::string> ctx;
  for (std::size_t i = 0; i < n; ++i) ctx.push_back("c" + std::to_string(i));
  const std::string removed = ctx[n - 1 - k];
  Named nt = namer.to_named(t, ctx);
  std::vector<std::string> ctx_u(ctx.begin(), ctx.begin() + static_cast<std::ptrdiff_t>(n - 1 - k));
  Named nu = namer.to_named(u, ctx_u);
  std::vector<std::string> rest = ctx;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(n - 1 - k));
  return to_term(subst_named(nt, removed, nu), rest);
}

}  // namespace

TEST_CASE("substitute: reference examples") {
  CHECK(alpha_equal(substitute(var(0), 0, simple(Kind::Zero)), simple(Kind::Zero)));
  // Lam(x, Var 1)[0 := zero] = Lam(x, zero)
  CHECK(alpha_equal(substitute(lam("x", var(1)), 0, simple(Kind::Zero)),
                    lam("x", simple(Kind::Zero))));
  // App(Var 0, Var 1)[1 := suc zero] = App(Var 0, suc zero)
  Term got = substitute(app(var(0), var(1)), 1, suc(simple(Kind::Zero)));
  CHECK(alpha_equal(got, app(var(0), suc(simple(Kind::Zero)))));
  CHECK(alpha_equal(got, oracle_substitute(app(var(0), var(1)), 1, suc(simple(Kind::Zero)), 2)));
}

TEST_CASE("substitute agrees with the nameful oracle on random terms") {
  support::TermGen gen(7);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 3;
    const std::size_t k = gen.pick(n);
    Term t = gen.gen(1 + gen.pick(10), n);
    Term u = gen.gen(1 + gen.pick(5), n - 1 - k);
    INFO("t = " << print(t, {"a", "b", "c"}) << ", k = " << k);
    CHECK(alpha_equal(substitute(t, k, u), oracle_substitute(t, k, u, n)));
  }
}

TEST_CASE("substitution lemma") {
  support::TermGen gen(11);
  for (int i = 0; i < 500; ++i) {
    // t under (rest, y, x); u under (rest, y); v under rest. A substituted
    // term lives outside every binder up to the one it replaces.
    Term t = gen.gen(1 + gen.pick(10), 3);
    Term u = gen.gen(1 + gen.pick(5), 2);
    Term v = gen.gen(1 + gen.pick(5), 1);
    Term lhs = substitute(substitute(t, 0, u), 0, v);
    Term rhs = substitute(substitute(t, 1, v), 0, substitute(u, 0, v));
    CHECK(alpha_equal(lhs, rhs));
  }
}

TEST_CASE("alpha_equal") {
  CHECK(alpha_equal(lam("x", var(0)), lam("y", var(0))));
  CHECK_FALSE(alpha_equal(simple(Kind::Zero), suc(simple(Kind::Zero))));
  CHECK_FALSE(alpha_equal(constant("c"), constant("d")));

  // Two spellings of the golden free theorem for the polymorphic identity.
  Term a = parse_term(
      "(X_1 : U) -> (X_2 : U) -> (X_R : X_1 -> X_2 -> U) -> (x_1 : X_1) -> (x_2 : X_2) -> "
      "X_R x_1 x_2 -> X_R (t X_1 x_1) (t X_2 x_2)");
  Term b = parse_term(
      "(A : U) (B : U) (P : A -> B -> U) (a : A) (b : B) (p : P a b) -> P (t A a) (t B b)");
  CHECK(alpha_equal(a, b));

  support::TermGen gen(3);
  std::vector<Term> pool;
  for (int i = 0; i < 60; ++i) pool.push_back(gen.gen(1 + gen.pick(4), 1));
  for (const auto& x : pool) {
    CHECK(alpha_equal(x, x));
    for (const auto& y : pool) {
      CHECK(alpha_equal(x, y) == alpha_equal(y, x));
      if (!alpha_equal(x, y)) continue;
      for (const auto& z : pool)
        if (alpha_equal(y, z)) CHECK(alpha_equal(x, z));
    }
  }
}

TEST_CASE("shift then strengthen is the identity") {
  support::TermGen gen(5);
  for (int i = 0; i < 300; ++i) {
    Term t = gen.gen(1 + gen.pick(12), 3);
    const std::size_t cutoff = gen.pick(3);
    auto back = strengthen(shift(t, 1, cutoff), cutoff);
    REQUIRE(back.has_value());
    CHECK(alpha_equal(*back, t));
    CHECK_FALSE(occurs(shift(t, 1, cutoff), cutoff));
  }
  CHECK_FALSE(strengthen(var(0), 0).has_value());
}
