#pragma once

// Depth-polymorphic term construction for the translator's derived
// witnesses. A Build produces its term for whatever target depth it is
// placed at, so variables bound by helper lambdas and terms computed
// outside them can be mixed without manual index arithmetic.

#include <functional>
#include <string>
#include <vector>

#include "httparam/term.hpp"

namespace httparam::build {

/// A target term together with the depth it was produced at.
struct Open {
  Term term;
  std::size_t depth = 0;

  Term at(std::size_t d) const {
    return shift(term, static_cast<std::ptrdiff_t>(d) - static_cast<std::ptrdiff_t>(depth));
  }
};

using Build = std::function<Term(std::size_t)>;

inline Build from(Open o) {
  return [o = std::move(o)](std::size_t d) { return o.at(d); };
}
inline Build closed(Term t) {
  return [t = std::move(t)](std::size_t) { return t; };
}
inline Build cnst(const std::string& name) { return closed(constant(name)); }

/// Contracts beta redexes and projections of literal pairs throughout `t`.
/// The kernel cannot infer a type for either form.
inline Term contract(const Term& t) {
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const auto& a : t.args()) {
    args.push_back(contract(a));
    changed = changed || !args.back().same_node(a);
  }
  if (t.kind() == Kind::App && args[0].kind() == Kind::Lam)
    return contract(substitute(args[0].arg(0), 0, args[1]));
  if ((t.kind() == Kind::Fst || t.kind() == Kind::Snd) && args[0].kind() == Kind::Pair)
    return args[0].arg(t.kind() == Kind::Fst ? 0 : 1);
  return changed ? t.with_args(std::move(args)) : t;
}

/// Applies, contracting a leading lambda by substitution so that relation
/// terms produced by the translator do not leave beta redexes behind.
inline Term beta_app(const Term& fn, const Term& arg) {
  if (fn.kind() == Kind::Lam) return contract(substitute(fn.arg(0), 0, arg));
  return app(fn, arg);
}

inline Build bapp(Build fn, std::vector<Build> args) {
  return [fn = std::move(fn), args = std::move(args)](std::size_t d) {
    Term t = fn(d);
    for (const auto& a : args) t = beta_app(t, a(d));
    return t;
  };
}

inline Build node(Kind k, std::vector<Build> args) {
  return [k, args = std::move(args)](std::size_t d) {
    std::vector<Term> ts;
    ts.reserve(args.size());
    for (const auto& a : args) ts.push_back(a(d));
    return Term::make(k, "", std::move(ts));
  };
}

inline Build bvar(std::size_t level, std::string name) {
  return [level, name = std::move(name)](std::size_t d) { return var(d - 1 - level, name); };
}

inline Build blam(std::string name, std::function<Build(Build)> body) {
  return [name = std::move(name), body = std::move(body)](std::size_t d) {
    return lam(name, body(bvar(d, name))(d + 1));
  };
}

inline Build bpi(std::string name, Build dom, std::function<Build(Build)> cod) {
  return [name = std::move(name), dom = std::move(dom), cod = std::move(cod)](std::size_t d) {
    return pi(name, dom(d), cod(bvar(d, name))(d + 1));
  };
}

inline Build bid(Build type, Build lhs, Build rhs) {
  return node(Kind::Id, {std::move(type), std::move(lhs), std::move(rhs)});
}
inline Build brefl(Build a) { return node(Kind::Refl, {std::move(a)}); }
inline Build bj(Build motive, Build base, Build lhs, Build rhs, Build path) {
  return node(Kind::J, {std::move(motive), std::move(base), std::move(lhs), std::move(rhs),
                        std::move(path)});
}

}  // namespace httparam::build
