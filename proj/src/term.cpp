#include "httparam/term.hpp"

#include <cstdio>
#include <cstdlib>
#include <functional>

namespace httparam {

namespace {

[[noreturn]] void fault(const char* what) {
  std::fprintf(stderr, "httparam: internal fault: %s\n", what);
  std::abort();
}

}  // namespace

std::size_t binders_at(Kind k, std::size_t child) {
  switch (k) {
    case Kind::Pi:
    case Kind::Sigma:
      return child == 1 ? 1 : 0;
    case Kind::Lam:
      return 1;
    default:
      return 0;
  }
}

std::size_t arity_of(Kind k) {
  switch (k) {
    case Kind::Var:
    case Kind::Const:
    case Kind::U:
    case Kind::Type:
    case Kind::Empty:
    case Kind::Unit:
    case Kind::Two:
    case Kind::Nat:
    case Kind::Circle:
    case Kind::Star:
    case Kind::Two0:
    case Kind::Two1:
    case Kind::Zero:
    case Kind::Base:
    case Kind::Loop:
      return 0;
    case Kind::Lam:
    case Kind::Fst:
    case Kind::Snd:
    case Kind::Refl:
    case Kind::Suc:
      return 1;
    case Kind::Pi:
    case Kind::App:
    case Kind::Sigma:
    case Kind::Pair:
    case Kind::EmptyElim:
      return 2;
    case Kind::Id:
    case Kind::UnitElim:
      return 3;
    case Kind::TwoElim:
    case Kind::NatElim:
    case Kind::CircElim:
      return 4;
    case Kind::J:
      return 5;
  }
  return 0;
}

Term Term::make(Kind kind, std::string name, std::vector<Term> args, std::size_t index,
                Span span) {
  if (args.size() != arity_of(kind)) fault("wrong number of children");
  for (const auto& a : args)
    if (!a) fault("null child");
  return Term(std::make_shared<const Node>(
      Node{kind, index, std::move(name), std::move(args), span}));
}

Term Term::with_span(Span span) const {
  return Term(std::make_shared<const Node>(
      Node{node_->kind, node_->index, node_->name, node_->args, span}));
}

Term Term::with_args(std::vector<Term> args) const {
  return make(node_->kind, node_->name, std::move(args), node_->index, node_->span);
}

Term var(std::size_t index, std::string name) {
  return Term::make(Kind::Var, std::move(name), {}, index);
}
Term constant(std::string name) { return Term::make(Kind::Const, std::move(name), {}); }
Term sort_u() { return Term::make(Kind::U, "", {}); }
Term sort_type() { return Term::make(Kind::Type, "", {}); }
Term pi(std::string binder, Term dom, Term cod) {
  return Term::make(Kind::Pi, std::move(binder), {std::move(dom), std::move(cod)});
}
Term arrow(Term dom, Term cod) { return pi("_", std::move(dom), shift(cod, 1)); }
Term lam(std::string binder, Term body) {
  return Term::make(Kind::Lam, std::move(binder), {std::move(body)});
}
Term app(Term fn, Term arg) { return Term::make(Kind::App, "", {std::move(fn), std::move(arg)}); }
Term apps(Term fn, std::initializer_list<Term> args) {
  for (const auto& a : args) fn = app(std::move(fn), a);
  return fn;
}
Term apps(Term fn, const std::vector<Term>& args) {
  for (const auto& a : args) fn = app(std::move(fn), a);
  return fn;
}
Term sigma(std::string binder, Term first, Term second) {
  return Term::make(Kind::Sigma, std::move(binder), {std::move(first), std::move(second)});
}
Term pair(Term a, Term b) { return Term::make(Kind::Pair, "", {std::move(a), std::move(b)}); }
Term fst(Term t) { return Term::make(Kind::Fst, "", {std::move(t)}); }
Term snd(Term t) { return Term::make(Kind::Snd, "", {std::move(t)}); }
Term id_type(Term type, Term lhs, Term rhs) {
  return Term::make(Kind::Id, "", {std::move(type), std::move(lhs), std::move(rhs)});
}
Term refl(Term a) { return Term::make(Kind::Refl, "", {std::move(a)}); }
Term j_elim(Term motive, Term base, Term lhs, Term rhs, Term path) {
  return Term::make(Kind::J, "", {std::move(motive), std::move(base), std::move(lhs),
                                  std::move(rhs), std::move(path)});
}
Term simple(Kind k) { return Term::make(k, "", {}); }
Term suc(Term n) { return Term::make(Kind::Suc, "", {std::move(n)}); }
Term empty_elim(Term motive, Term scrutinee) {
  return Term::make(Kind::EmptyElim, "", {std::move(motive), std::move(scrutinee)});
}
Term unit_elim(Term motive, Term star_case, Term scrutinee) {
  return Term::make(Kind::UnitElim, "",
                    {std::move(motive), std::move(star_case), std::move(scrutinee)});
}
Term two_elim(Term motive, Term case0, Term case1, Term scrutinee) {
  return Term::make(Kind::TwoElim, "",
                    {std::move(motive), std::move(case0), std::move(case1), std::move(scrutinee)});
}
Term nat_elim(Term motive, Term zero_case, Term suc_case, Term scrutinee) {
  return Term::make(Kind::NatElim, "", {std::move(motive), std::move(zero_case),
                                        std::move(suc_case), std::move(scrutinee)});
}
Term circ_elim(Term motive, Term base_case, Term loop_case, Term scrutinee) {
  return Term::make(Kind::CircElim, "", {std::move(motive), std::move(base_case),
                                         std::move(loop_case), std::move(scrutinee)});
}

namespace {

// Rebuilds `t` bottom-up, calling `on_var(node, depth)` for every variable,
// where depth counts binders crossed inside `t`. Untouched subtrees are shared.
Term map_vars(const Term& t, std::size_t depth,
              const std::function<Term(const Term&, std::size_t)>& on_var) {
  if (t.kind() == Kind::Var) return on_var(t, depth);
  if (t.arity() == 0) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    args.push_back(map_vars(t.arg(i), depth + binders_at(t.kind(), i), on_var));
    changed = changed || !args.back().same_node(t.arg(i));
  }
  return changed ? t.with_args(std::move(args)) : t;
}

}  // namespace

Term shift(const Term& t, std::ptrdiff_t by, std::size_t cutoff) {
  if (by == 0) return t;
  return map_vars(t, 0, [&](const Term& v, std::size_t depth) {
    if (v.index() < cutoff + depth) return v;
    auto moved = static_cast<std::ptrdiff_t>(v.index()) + by;
    if (moved < static_cast<std::ptrdiff_t>(cutoff + depth)) fault("shift drops a live variable");
    return Term::make(Kind::Var, v.name(), {}, static_cast<std::size_t>(moved), v.span());
  });
}

Term substitute(const Term& t, std::size_t k, const Term& u) {
  return map_vars(t, 0, [&](const Term& v, std::size_t depth) {
    const std::size_t target = k + depth;
    if (v.index() < target) return v;
    if (v.index() == target) return shift(u, static_cast<std::ptrdiff_t>(target));
    return Term::make(Kind::Var, v.name(), {}, v.index() - 1, v.span());
  });
}

bool occurs(const Term& t, std::size_t index) {
  if (t.kind() == Kind::Var) return t.index() == index;
  for (std::size_t i = 0; i < t.arity(); ++i)
    if (occurs(t.arg(i), index + binders_at(t.kind(), i))) return true;
  return false;
}

std::optional<Term> strengthen(const Term& t, std::size_t k) {
  if (occurs(t, k)) return std::nullopt;
  return substitute(t, k, var(0));  // the replacement is never reached
}

bool alpha_equal(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Var:
      return a.index() == b.index();
    case Kind::Const:
      return a.name() == b.name();
    default:
      break;
  }
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!alpha_equal(a.arg(i), b.arg(i))) return false;
  return true;
}

std::size_t term_size(const Term& t) {
  std::size_t n = 1;
  for (const auto& c : t.args()) n += term_size(c);
  return n;
}

}  // namespace httparam
