#include <sstream>

#include "httparam/kernel.hpp"

namespace httparam {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Mismatch: return "mismatch";
    case ErrorKind::NotAFunction: return "not-a-function";
    case ErrorKind::NotAPair: return "not-a-pair";
    case ErrorKind::NotAType: return "not-a-type";
    case ErrorKind::Unbound: return "unbound";
    case ErrorKind::UniverseViolation: return "universe-violation";
  }
  return "?";
}

TypeError::TypeError(ErrorKind kind, std::string expected, std::string actual, Span span)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": expected " + expected +
                         ", got " + actual),
      kind_(kind),
      expected_(std::move(expected)),
      actual_(std::move(actual)),
      span_(span) {}

void TypeError::set_decl(std::string d, Span fallback) {
  decl_ = std::move(d);
  if (span_.line == 0) span_ = fallback;
}

std::string TypeError::render(const std::string& file) const {
  std::ostringstream out;
  out << "ERROR " << file << ":" << span_.line << ":" << span_.col << " ["
      << error_kind_name(kind_) << "] in " << decl_ << ": expected " << expected_ << ", got "
      << actual_;
  return out.str();
}

// ---------------------------------------------------------------------------
// Environments
// ---------------------------------------------------------------------------

const GlobalEntry* GlobalEnv::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

void GlobalEnv::add(GlobalEntry e) {
  index_.emplace(e.decl.name, entries_.size());
  entries_.push_back(std::move(e));
}

std::size_t GlobalEnv::axiom_count() const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += e.decl.kind == DeclKind::Axiom;
  return n;
}

Context Context::bind(std::string name, Val type) const {
  Context out = *this;
  out.env_ = env_.push(vvar(names_.size(), name));
  out.names_.push_back(std::move(name));
  out.types_.push_back(std::move(type));
  return out;
}

// ---------------------------------------------------------------------------
// Checking
// ---------------------------------------------------------------------------

std::string Kernel::show(const Context& ctx, const Val& v) const {
  return print(readback(ctx, v), ctx.names());
}

void Kernel::mismatch(const Context& ctx, const Term& at, const Val& expected, const Val& actual,
                      ErrorKind kind) const {
  throw TypeError(kind, show(ctx, expected), show(ctx, actual), at.span());
}

void Kernel::convert(const Context& ctx, const Term& at, const Val& expected,
                     const Val& actual) const {
  auto e = as<VSort>(expected);
  auto a = as<VSort>(actual);
  if (e && a) {
    // U is included in Type, not the other way round.
    if (a->large && !e->large) mismatch(ctx, at, expected, actual, ErrorKind::UniverseViolation);
    return;
  }
  if (!conv(ctx.size(), expected, actual)) mismatch(ctx, at, expected, actual);
}

Val Kernel::infer_sort(const Context& ctx, const Term& t) const {
  Val s = infer(ctx, t);
  if (!as<VSort>(s))
    throw TypeError(ErrorKind::NotAType, "a type", print(t, ctx.names()) + " : " + show(ctx, s),
                    t.span());
  return s;
}

bool Kernel::is_small(const Context& ctx, const Term& t) const {
  return !as<VSort>(infer_sort(ctx, t))->large;
}

Context Kernel::context_of(const Telescope& tele) const {
  Context ctx;
  for (const auto& e : tele) {
    infer_sort(ctx, e.type);
    ctx = ctx.bind(e.name, eval(ctx.env(), e.type));
  }
  return ctx;
}

void Kernel::check_motive(const Context& ctx, const Term& motive,
                          const std::vector<Domain>& doms) const {
  Context cur = ctx;
  Term body = motive;
  std::vector<Val> bound;
  std::size_t i = 0;
  for (; i < doms.size() && body.kind() == Kind::Lam; ++i) {
    Val dom = doms[i](bound);
    cur = cur.bind(body.name(), dom);
    bound.push_back(cur.last());
    body = body.arg(0);
  }
  if (i == doms.size()) {
    infer_sort(cur, body);
    return;
  }
  // Partially applied or named motive: its type must be a Pi chain ending in a sort.
  Val ty = infer(cur, body);
  for (; i < doms.size(); ++i) {
    auto p = as<VPi>(ty);
    if (!p)
      throw TypeError(ErrorKind::NotAFunction, "a type family", show(cur, ty), body.span());
    Val dom = doms[i](bound);
    if (!conv(cur.size(), dom, p->dom)) mismatch(cur, body, dom, p->dom);
    Val x = vvar(cur.size(), p->name);
    cur = cur.bind(p->name, dom);
    bound.push_back(x);
    ty = p->cod(x);
  }
  if (!as<VSort>(ty))
    throw TypeError(ErrorKind::NotAType, "a family of types", show(cur, ty), motive.span());
}

void Kernel::check(const Context& ctx, const Term& t, const Val& type) const {
  switch (t.kind()) {
    case Kind::Lam: {
      auto p = as<VPi>(type);
      if (!p)
        throw TypeError(ErrorKind::NotAFunction, show(ctx, type), print(t, ctx.names()),
                        t.span());
      Context inner = ctx.bind(t.name(), p->dom);
      check(inner, t.arg(0), p->cod(inner.last()));
      return;
    }
    case Kind::Pair: {
      auto s = as<VSigma>(type);
      if (!s)
        throw TypeError(ErrorKind::NotAPair, show(ctx, type), print(t, ctx.names()), t.span());
      check(ctx, t.arg(0), s->first);
      check(ctx, t.arg(1), s->second(eval(ctx.env(), t.arg(0))));
      return;
    }
    case Kind::Refl: {
      if (auto id = as<VId>(type)) {
        check(ctx, t.arg(0), id->type);
        Val a = eval(ctx.env(), t.arg(0));
        if (!conv(ctx.size(), a, id->lhs) || !conv(ctx.size(), a, id->rhs))
          mismatch(ctx, t, type, make_value({VId{id->type, a, a}}));
        return;
      }
      break;
    }
    default:
      break;
  }
  convert(ctx, t, type, infer(ctx, t));
}

Val Kernel::infer(const Context& ctx, const Term& t) const {
  const Env& env = ctx.env();
  auto ev = [&](const Term& s) { return eval(env, s); };
  auto apply_motive = [](const Val& m, std::initializer_list<Val> args) {
    Val r = m;
    for (const auto& a : args) r = vapply(r, a);
    return r;
  };
  switch (t.kind()) {
    case Kind::Var:
      return ctx.type_at_index(t.index());
    case Kind::Const: {
      const GlobalEntry* g = globals_.find(t.name());
      if (!g) throw TypeError(ErrorKind::Unbound, "a declared name", t.name(), t.span());
      return g->type;
    }
    case Kind::U:
      return vsort(true);
    case Kind::Type:
      throw TypeError(ErrorKind::UniverseViolation, "a term that has a type", "Type", t.span());
    case Kind::Pi:
    case Kind::Sigma: {
      Val s1 = infer_sort(ctx, t.arg(0));
      Val s2 = infer_sort(ctx.bind(t.name(), ev(t.arg(0))), t.arg(1));
      return vsort(as<VSort>(s1)->large || as<VSort>(s2)->large);
    }
    case Kind::Lam:
    case Kind::Pair:
      throw TypeError(ErrorKind::Mismatch, "a term whose type can be inferred",
                      print(t, ctx.names()), t.span());
    case Kind::App: {
      Val ft = infer(ctx, t.arg(0));
      auto p = as<VPi>(ft);
      if (!p)
        throw TypeError(ErrorKind::NotAFunction, "a function",
                        print(t.arg(0), ctx.names()) + " : " + show(ctx, ft), t.arg(0).span());
      check(ctx, t.arg(1), p->dom);
      return p->cod(ev(t.arg(1)));
    }
    case Kind::Fst:
    case Kind::Snd: {
      Val pt = infer(ctx, t.arg(0));
      auto s = as<VSigma>(pt);
      if (!s)
        throw TypeError(ErrorKind::NotAPair, "a pair",
                        print(t.arg(0), ctx.names()) + " : " + show(ctx, pt), t.arg(0).span());
      if (t.kind() == Kind::Fst) return s->first;
      return s->second(vfst(ev(t.arg(0))));
    }
    case Kind::Id: {
      Val s = infer_sort(ctx, t.arg(0));
      Val a = ev(t.arg(0));
      check(ctx, t.arg(1), a);
      check(ctx, t.arg(2), a);
      return s;
    }
    case Kind::Refl: {
      Val a = infer(ctx, t.arg(0));
      Val v = ev(t.arg(0));
      return make_value({VId{a, v, v}});
    }
    case Kind::J: {
      const Term& path = t.arg(4);
      Val pt = infer(ctx, path);
      auto id = as<VId>(pt);
      if (!id)
        throw TypeError(ErrorKind::Mismatch, "an identity proof",
                        print(path, ctx.names()) + " : " + show(ctx, pt), path.span());
      Val A = id->type;
      check(ctx, t.arg(2), A);
      check(ctx, t.arg(3), A);
      Val a = ev(t.arg(2));
      Val b = ev(t.arg(3));
      if (!conv(ctx.size(), a, id->lhs)) mismatch(ctx, t.arg(2), id->lhs, a);
      if (!conv(ctx.size(), b, id->rhs)) mismatch(ctx, t.arg(3), id->rhs, b);
      check_motive(ctx, t.arg(0),
                   {[A](const std::vector<Val>&) { return A; },
                    [A, a](const std::vector<Val>& xs) { return make_value({VId{A, a, xs[0]}}); }});
      Val m = ev(t.arg(0));
      check(ctx, t.arg(1), apply_motive(m, {a, make_value({VRefl{a}})}));
      return apply_motive(m, {b, ev(path)});
    }
    case Kind::Empty:
    case Kind::Unit:
    case Kind::Two:
    case Kind::Nat:
    case Kind::Circle:
      return vsort(false);
    case Kind::Star:
      return vatom(Kind::Unit);
    case Kind::Two0:
    case Kind::Two1:
      return vatom(Kind::Two);
    case Kind::Zero:
      return vatom(Kind::Nat);
    case Kind::Suc:
      check(ctx, t.arg(0), vatom(Kind::Nat));
      return vatom(Kind::Nat);
    case Kind::Base:
      return vatom(Kind::Circle);
    case Kind::Loop:
      return make_value({VId{vatom(Kind::Circle), vatom(Kind::Base), vatom(Kind::Base)}});
    case Kind::EmptyElim:
    case Kind::UnitElim:
    case Kind::TwoElim:
    case Kind::NatElim:
    case Kind::CircElim: {
      static const std::pair<Kind, Kind> kDomain[] = {{Kind::EmptyElim, Kind::Empty},
                                                      {Kind::UnitElim, Kind::Unit},
                                                      {Kind::TwoElim, Kind::Two},
                                                      {Kind::NatElim, Kind::Nat},
                                                      {Kind::CircElim, Kind::Circle}};
      Kind dom_kind = Kind::Empty;
      for (auto [e, d] : kDomain)
        if (e == t.kind()) dom_kind = d;
      Val dom = vatom(dom_kind);
      const Term& scrutinee = t.arg(t.arity() - 1);
      check(ctx, scrutinee, dom);
      check_motive(ctx, t.arg(0), {[dom](const std::vector<Val>&) { return dom; }});
      Val m = ev(t.arg(0));
      auto at = [&](Val x) { return vapply(m, std::move(x)); };
      switch (t.kind()) {
        case Kind::UnitElim:
          check(ctx, t.arg(1), at(vatom(Kind::Star)));
          break;
        case Kind::TwoElim:
          check(ctx, t.arg(1), at(vatom(Kind::Two0)));
          check(ctx, t.arg(2), at(vatom(Kind::Two1)));
          break;
        case Kind::NatElim: {
          check(ctx, t.arg(1), at(vatom(Kind::Zero)));
          // (k : Nat) -> M k -> M (suc k)
          Val step = make_value({VPi{"k", vatom(Kind::Nat), [m](const Val& k) {
                                       return make_value({VPi{"ih", vapply(m, k),
                                                              [m, k](const Val&) {
                                                                return vapply(
                                                                    m, make_value({VSuc{k}}));
                                                              }}});
                                     }}});
          check(ctx, t.arg(2), step);
          break;
        }
        case Kind::CircElim: {
          Val b_ty = at(vatom(Kind::Base));
          check(ctx, t.arg(1), b_ty);
          // Id (M base) (transport along loop of the base case) (base case)
          Val fam = make_value({VLam{"y", [m](const Val& y) {
                                       return make_value(
                                           {VLam{"q", [m, y](const Val&) { return vapply(m, y); }}});
                                     }}});
          Val b = ev(t.arg(1));
          Val moved = make_value({VNeutral{Head{Kind::Loop, 0, "loop"},
                                           {Frame{Kind::J, {fam, b, vatom(Kind::Base),
                                                            vatom(Kind::Base)}}}}});
          check(ctx, t.arg(2), make_value({VId{b_ty, moved, b}}));
          break;
        }
        default:
          break;
      }
      return at(ev(scrutinee));
    }
  }
  throw std::logic_error("unhandled term kind");
}

// ---------------------------------------------------------------------------
// Loading
// ---------------------------------------------------------------------------

void add_declaration(GlobalEnv& globals, const Declaration& d, bool basis) {
  if (globals.find(d.name))
    throw ParseError("duplicate", d.span, "declaration '" + d.name + "' is already defined");
  Kernel k(globals);
  Context empty;
  GlobalEntry entry{d, nullptr, nullptr, basis};
  try {
    k.infer_sort(empty, d.type);
    entry.type = k.eval(empty.env(), d.type);
    if (d.kind == DeclKind::Definition) {
      k.check(empty, *d.body, entry.type);
      entry.value = k.eval(empty.env(), *d.body);
    } else {
      entry.value = make_value({VNeutral{Head{Kind::Const, 0, d.name}, {}}});
    }
  } catch (TypeError& e) {
    e.set_decl(d.name, d.span);
    throw;
  }
  globals.add(std::move(entry));
}

void load(GlobalEnv& globals, const SourceFile& file, bool basis) {
  for (const auto& d : file.decls) add_declaration(globals, d, basis);
}

}  // namespace httparam
