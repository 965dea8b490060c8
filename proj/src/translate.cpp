#include "httparam/translate.hpp"

#include <cctype>
#include <functional>
#include <sstream>

#include "build.hpp"
#include "translate_impl.hpp"

namespace httparam {

using build::Open;

std::string param_name(const std::string& c) { return c + "_param"; }

namespace detail {

std::string binder_base(const std::string& name, const Term& domain) {
  if (!name.empty() && name != "_") return name;
  if (domain.kind() == Kind::Var || domain.kind() == Kind::Const) {
    std::string lower = domain.name();
    if (!lower.empty()) lower[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(lower[0])));
    if (lower != domain.name()) return lower;
  }
  switch (domain.kind()) {
    case Kind::Id: return "p";
    case Kind::Nat: return "n";
    case Kind::Two: return "b";
    case Kind::Unit: return "u";
    case Kind::Empty: return "e";
    case Kind::Circle: return "c";
    default: return "a";
  }
}

// Collapses `fun a b => h a b` to `h` when h mentions neither binder.
Term eta_contract2(const Term& t) {
  if (t.kind() != Kind::Lam || t.arg(0).kind() != Kind::Lam) return t;
  const Term& body = t.arg(0).arg(0);
  if (body.kind() != Kind::App || body.arg(0).kind() != Kind::App) return t;
  const Term& second = body.arg(1);
  const Term& first = body.arg(0).arg(1);
  const Term& head = body.arg(0).arg(0);
  if (!second.is(Kind::Var) || second.index() != 0) return t;
  if (!first.is(Kind::Var) || first.index() != 1) return t;
  if (occurs(head, 0) || occurs(head, 1)) return t;
  return shift(head, -2);
}

// Projections that contract on literal pairs, so relations of Sigma types
// stay inferable when applied to them.
Term project_pair(Kind k, const Term& t) {
  if (t.kind() == Kind::Pair) return t.arg(k == Kind::Fst ? 0 : 1);
  return k == Kind::Fst ? fst(t) : snd(t);
}

}  // namespace detail

using detail::Scope;
using detail::Triple;

Translator::Impl::Impl(Translator& owner) : self(owner), kernel(owner.globals_) {}

Scope Translator::Impl::bind(const Scope& s, const std::string& src_name, const std::string& base,
                             Val type) const {
  Scope out = s;
  const std::size_t d = s.depth;
  out.src = s.src.bind(src_name, std::move(type));
  out.vars.push_back(Triple{Open{var(0, base + "_1"), d + 1}, Open{var(0, base + "_2"), d + 2},
                            Open{var(0, base + "_R"), d + 3}});
  out.names.push_back(base);
  out.depth = d + 3;
  return out;
}

Scope Translator::Impl::scope_of(const Telescope& tele, Telescope* translated) {
  Scope s;
  for (const auto& e : tele) {
    kernel.infer_sort(s.src, e.type);
    const std::string base = detail::binder_base(e.name, e.type);
    if (translated) {
      translated->push_back({base + "_1", project(s, e.type, Side::Left)});
      translated->push_back({base + "_2", project(s.pushed(1), e.type, Side::Right)});
      translated->push_back(
          {base + "_R", relate(s.pushed(2), e.type, var(1, base + "_1"), var(0, base + "_2"))});
    }
    s = bind(s, e.name, base, kernel.eval(s.src.env(), e.type));
  }
  return s;
}

Term Translator::Impl::project(const Scope& s, const Term& t, Side side) const {
  struct Walk {
    const Scope& s;
    Side side;
    Term operator()(const Term& t, std::size_t under) const {
      if (t.kind() == Kind::Var) {
        if (t.index() < under) return t;
        const std::size_t level = s.src.size() - 1 - (t.index() - under);
        const Triple& tr = s.vars.at(level);
        return (side == Side::Left ? tr.left : tr.right).at(s.depth + under);
      }
      if (t.arity() == 0) return t;
      std::vector<Term> args;
      for (std::size_t i = 0; i < t.arity(); ++i)
        args.push_back((*this)(t.arg(i), under + binders_at(t.kind(), i)));
      return t.with_args(std::move(args));
    }
  };
  return Walk{s, side}(t, 0);
}

Term Translator::Impl::relation(const Scope& s, const Term& type) {
  const std::string base = detail::binder_base("_", type);
  const std::string n1 = base + "_1", n2 = base + "_2";
  Term body = relate(s.pushed(2), type, var(1, n1), var(0, n2));
  return detail::eta_contract2(lam(n1, lam(n2, body)));
}

detail::PathType Translator::Impl::path_type(const Scope& s, const Term& type) {
  using build::from;
  return {from(Open{project(s, type, Side::Left), s.depth}),
          from(Open{project(s, type, Side::Right), s.depth}),
          from(Open{relation(s, type), s.depth}), kernel.is_small(s.src, type)};
}

build::Build detail::pathover(const PathType& P, const build::Build& a1, const build::Build& a2,
                              const build::Build& aw, const build::Build& b1,
                              const build::Build& b2, const build::Build& bw,
                              const build::Build& p1, const build::Build& p2) {
  using namespace build;
  if (P.small) return bapp(cnst("dpath2"), {P.A1, P.A2, P.R, a1, a2, b1, b2, p1, p2, aw, bw});
  // The relation lands in Type, out of reach of the basis definition:
  // spell out its body, transporting left then right.
  Build R = P.R;
  Build left_moved = bj(blam("x", [=](Build x) { return blam("q", [=](Build) {
                          return bapp(R, {x, a2}); }); }),
                        aw, a1, b1, p1);
  Build moved = bj(blam("y", [=](Build y) { return blam("q", [=](Build) {
                     return bapp(R, {b1, y}); }); }),
                   left_moved, a2, b2, p2);
  return bid(bapp(R, {b1, b2}), moved, bw);
}

Term Translator::Impl::relate(const Scope& s, const Term& type, const Term& lhs,
                              const Term& rhs) {
  const std::size_t d = s.depth;
  switch (type.kind()) {
    case Kind::Pi: {
      const Term& dom = type.arg(0);
      const std::string base = detail::binder_base(type.name(), dom);
      const std::string n1 = base + "_1", n2 = base + "_2", nr = base + "_R";
      Term dom1 = project(s, dom, Side::Left);
      Term dom2 = project(s.pushed(1), dom, Side::Right);
      Term rel = relate(s.pushed(2), dom, var(1, n1), var(0, n2));
      Scope inner = bind(s, type.name(), base, kernel.eval(s.src.env(), dom));
      Term body = relate(inner, type.arg(1), build::beta_app(shift(lhs, 3), var(2, n1)),
                         build::beta_app(shift(rhs, 3), var(1, n2)));
      return pi(n1, dom1, pi(n2, dom2, pi(nr, rel, body)));
    }
    case Kind::Sigma: {
      const Term& first = type.arg(0);
      const std::string base = detail::binder_base(type.name(), first);
      const std::string nr = base + "_R";
      Term l1 = detail::project_pair(Kind::Fst, lhs), r1 = detail::project_pair(Kind::Fst, rhs);
      Term rel = relate(s, first, l1, r1);
      Scope inner = s;
      inner.src = s.src.bind(type.name(), kernel.eval(s.src.env(), first));
      inner.vars.push_back(Triple{Open{l1, d}, Open{r1, d}, Open{var(0, nr), d + 1}});
      inner.names.push_back(base);
      inner.depth = d + 1;
      Term body = relate(inner, type.arg(1), detail::project_pair(Kind::Snd, shift(lhs, 1)),
                         detail::project_pair(Kind::Snd, shift(rhs, 1)));
      return sigma(nr, rel, body);
    }
    case Kind::Id: {
      using build::from;
      const Term& A = type.arg(0);
      Val av = kernel.eval(s.src.env(), A);
      auto triple = [&](const Term& x) {
        return std::array<build::Build, 3>{from(Open{project(s, x, Side::Left), d}),
                                           from(Open{project(s, x, Side::Right), d}),
                                           from(Open{translate(s, x, av), d})};
      };
      auto a = triple(type.arg(1));
      auto b = triple(type.arg(2));
      detail::PathType P = path_type(s, A);
      return detail::pathover(P, a[0], a[1], a[2], b[0], b[1], b[2], from(Open{lhs, d}),
                              from(Open{rhs, d}))(d);
    }
    case Kind::U:
      return pi("_", lhs, pi("_", shift(rhs, 1), sort_u()));
    case Kind::Type:
      throw std::logic_error("Type has no relational interpretation");
    case Kind::Empty:
    case Kind::Unit:
    case Kind::Two:
    case Kind::Nat:
    case Kind::Circle:
      return id_type(type, lhs, rhs);
    default: {
      // A small type in neutral form: its witness is the relation itself.
      Term w = translate(s, type, vsort(false));
      return build::beta_app(build::beta_app(w, lhs), rhs);
    }
  }
}

namespace {

Val vpi(std::string name, Val dom, Closure cod) {
  return make_value({VPi{std::move(name), std::move(dom), std::move(cod)}});
}

Val motive_at(const Val& m, const Val& x) { return vapply(m, x); }

/// Expected types of the branches of a base-type eliminator with motive `m`.
std::vector<Val> branch_types(Kind k, const Val& m) {
  switch (k) {
    case Kind::UnitElim:
      return {motive_at(m, vatom(Kind::Star))};
    case Kind::TwoElim:
      return {motive_at(m, vatom(Kind::Two0)), motive_at(m, vatom(Kind::Two1))};
    case Kind::NatElim:
      return {motive_at(m, vatom(Kind::Zero)),
              vpi("k", vatom(Kind::Nat), [m](const Val& n) {
                return vpi("ih", vapply(m, n), [m, n](const Val&) {
                  return vapply(m, make_value({VSuc{n}}));
                });
              })};
    default:
      return {};
  }
}

Kind scrutinee_type(Kind k) {
  switch (k) {
    case Kind::EmptyElim: return Kind::Empty;
    case Kind::UnitElim: return Kind::Unit;
    case Kind::TwoElim: return Kind::Two;
    default: return Kind::Nat;
  }
}

// Binder names of a motive `fun x y => ...`, falling back to defaults.
std::vector<std::string> motive_names(const Term& m, std::vector<std::string> names) {
  const Term* cur = &m;
  for (auto& n : names) {
    if (cur->kind() != Kind::Lam) break;
    if (cur->name() != "_") n = cur->name();
    cur = &cur->arg(0);
  }
  return names;
}

}  // namespace

Term Translator::Impl::translate(const Scope& s, const Term& t, const Val& expected) {
  const std::size_t d = s.depth;
  const Env& env = s.src.env();
  auto ev = [&](const Term& x) { return kernel.eval(env, x); };
  switch (t.kind()) {
    case Kind::Var: {
      const std::size_t level = s.src.size() - 1 - t.index();
      return s.vars.at(level).witness.at(d);
    }
    case Kind::Const:
      return witness_for(t.name());
    case Kind::Lam: {
      const VPi* p = expected ? as<VPi>(expected) : nullptr;
      if (!p) throw std::logic_error("lambda translated without a function type");
      Term dom_syn = kernel.readback(s.src, p->dom);
      const std::string base = detail::binder_base(t.name(), dom_syn);
      Scope inner = bind(s, t.name(), base, p->dom);
      Term body = translate(inner, t.arg(0), p->cod(inner.src.last()));
      return lam(base + "_1", lam(base + "_2", lam(base + "_R", body)));
    }
    case Kind::App: {
      Val ft = kernel.infer(s.src, t.arg(0));
      const VPi* p = as<VPi>(ft);
      if (!p) throw std::logic_error("application of a non-function during translation");
      Term f = translate(s, t.arg(0), ft);
      return apps(f, {project(s, t.arg(1), Side::Left), project(s, t.arg(1), Side::Right),
                      translate(s, t.arg(1), p->dom)});
    }
    case Kind::Pair: {
      const VSigma* sg = expected ? as<VSigma>(expected) : nullptr;
      if (!sg) throw std::logic_error("pair translated without a sigma type");
      Term a = translate(s, t.arg(0), sg->first);
      Term b = translate(s, t.arg(1), sg->second(ev(t.arg(0))));
      return pair(a, b);
    }
    case Kind::Fst:
    case Kind::Snd: {
      Term inner = translate(s, t.arg(0), kernel.infer(s.src, t.arg(0)));
      return t.kind() == Kind::Fst ? fst(inner) : snd(inner);
    }
    case Kind::Refl: {
      const VId* id = expected ? as<VId>(expected) : nullptr;
      Val ty = id ? id->type : kernel.infer(s.src, t.arg(0));
      return refl(translate(s, t.arg(0), ty));
    }
    case Kind::U:
    case Kind::Pi:
    case Kind::Sigma:
    case Kind::Id:
    case Kind::Empty:
    case Kind::Unit:
    case Kind::Two:
    case Kind::Nat:
    case Kind::Circle:
      return relation(s, t);
    case Kind::Type:
      throw std::logic_error("Type has no relational interpretation");
    case Kind::Star:
    case Kind::Two0:
    case Kind::Two1:
    case Kind::Zero:
    case Kind::Base:
      return refl(t);
    case Kind::Suc: {
      Term n = t.arg(0);
      return apps(constant("ap"),
                  {simple(Kind::Nat), simple(Kind::Nat), lam("n", suc(var(0, "n"))),
                   project(s, n, Side::Left), project(s, n, Side::Right),
                   translate(s, n, vatom(Kind::Nat))});
    }
    case Kind::Loop:
      return apps(constant("id_rel_diag"),
                  {simple(Kind::Circle), simple(Kind::Base), simple(Kind::Base), t});
    case Kind::J:
      return derive_j(s, t);
    case Kind::EmptyElim:
    case Kind::UnitElim:
    case Kind::TwoElim:
    case Kind::NatElim:
      return derive_elim(s, t);
    case Kind::CircElim:
      return derive_circ(s, t);
  }
  throw std::logic_error("unhandled term in translation");
}

Term Translator::Impl::derive_j(const Scope& s, const Term& t) {
  using namespace build;
  const std::size_t d = s.depth;
  const Term &M = t.arg(0), &base_case = t.arg(1), &a = t.arg(2), &b = t.arg(3), &p = t.arg(4);
  Val pt = kernel.infer(s.src, p);
  const VId* id = as<VId>(pt);
  Val Av = id->type;
  Val av = kernel.eval(s.src.env(), a);
  Term A = kernel.readback(s.src, Av);
  detail::PathType P = path_type(s, A);

  auto open = [&](const Term& x) { return from(Open{x, d}); };
  auto copies = [&](const Term& x, const Val& ty) {
    return std::array<Build, 3>{open(project(s, x, Side::Left)), open(project(s, x, Side::Right)),
                                open(translate(s, x, ty))};
  };
  Val mty = vpi("y", Av, [Av, av](const Val& y) {
    return vpi("q", make_value({VId{Av, av, y}}), [](const Val&) { return vsort(true); });
  });
  Val mv = kernel.eval(s.src.env(), M);
  auto m = copies(M, mty);
  auto dd = copies(base_case, vapply(vapply(mv, av), make_value({VRefl{av}})));
  auto aa = copies(a, Av);
  auto bb = copies(b, Av);
  auto pp = copies(p, pt);

  auto names = motive_names(M, {"y", "q"});
  const std::string y1 = names[0] + "_1", y2n = names[0] + "_2", yr = names[0] + "_R";
  const std::string q1 = names[1] + "_1", q2n = names[1] + "_2", qr = names[1] + "_R";

  Build a1 = aa[0], a2 = aa[1], aw = aa[2];
  Build M1 = m[0], M2 = m[1], Mw = m[2];
  Build d1 = dd[0], d2 = dd[1], dw = dd[2];
  auto mhat = [=](Build y1v, Build y2v, Build ywv, Build q1v, Build q2v, Build qwv, Build e1,
                  Build e2) { return bapp(Mw, {y1v, y2v, ywv, q1v, q2v, qwv, e1, e2}); };
  auto j1 = [=](Build y, Build q) { return bj(M1, d1, a1, y, q); };
  auto j2 = [=](Build y, Build q) { return bj(M2, d2, a2, y, q); };

  Build M3 = blam(yr, [=](Build z) { return blam(qr, [=](Build w) {
    return mhat(a1, a2, z, brefl(a1), brefl(a2), w, d1, d2); }); });
  Build D2 = blam(yr, [=](Build yw) { return blam(qr, [=](Build qw) {
    return bj(M3, dw, aw, yw, qw); }); });
  Build Mid = blam(y2n, [=](Build y2) { return blam(q2n, [=](Build q2) {
    return bpi(yr, bapp(P.R, {a1, y2}), [=](Build yw) {
      return bpi(qr, detail::pathover(P, a1, a2, aw, a1, y2, yw, brefl(a1), q2), [=](Build qw) {
        return mhat(a1, y2, yw, brefl(a1), q2, qw, d1, j2(y2, q2)); }); }); }); });
  Build D1 = blam(y2n, [=](Build y2) { return blam(yr, [=](Build yw) {
    return blam(q2n, [=](Build q2) { return bapp(bj(Mid, D2, a2, y2, q2), {yw}); }); }); });
  Build Mout = blam(y1, [=](Build y1v) { return blam(q1, [=](Build q1v) {
    return bpi(y2n, P.A2, [=](Build y2) {
      return bpi(yr, bapp(P.R, {y1v, y2}), [=](Build yw) {
        return bpi(q2n, bid(P.A2, a2, y2), [=](Build q2) {
          return bpi(qr, detail::pathover(P, a1, a2, aw, y1v, y2, yw, q1v, q2), [=](Build qw) {
            return mhat(y1v, y2, yw, q1v, q2, qw, j1(y1v, q1v), j2(y2, q2)); }); }); }); }); }); });
  Build W = bapp(bj(Mout, D1, a1, bb[0], pp[0]), {bb[1], bb[2], pp[1], pp[2]});
  return W(d);
}

Term Translator::Impl::derive_elim(const Scope& s, const Term& t) {
  using namespace build;
  const std::size_t d = s.depth;
  const Kind k = t.kind();
  const Kind base_type = scrutinee_type(k);
  const Term& M = t.arg(0);
  const Term& e = t.arg(t.arity() - 1);
  Val mv = kernel.eval(s.src.env(), M);
  Val mty = vpi("c", vatom(base_type), [](const Val&) { return vsort(true); });

  auto open = [&](const Term& x) { return from(Open{x, d}); };
  auto copies = [&](const Term& x, const Val& ty) {
    return std::array<Build, 3>{open(project(s, x, Side::Left)), open(project(s, x, Side::Right)),
                                open(translate(s, x, ty))};
  };
  auto m = copies(M, mty);
  std::vector<Val> btys = branch_types(k, mv);
  std::vector<std::array<Build, 3>> branches;
  for (std::size_t i = 0; i < btys.size(); ++i) branches.push_back(copies(t.arg(1 + i), btys[i]));
  auto ee = copies(e, vatom(base_type));

  auto elim_side = [=](int side, Build x) {
    std::vector<Build> ops{m[side]};
    for (const auto& br : branches) ops.push_back(br[side]);
    ops.push_back(std::move(x));
    return node(k, std::move(ops));
  };
  Build Mw = m[2];
  auto mhat = [=](Build x1, Build x2, Build xw, Build r1, Build r2) {
    return bapp(Mw, {x1, x2, xw, r1, r2});
  };
  const std::string kn = motive_names(M, {"c"})[0];
  Build P = blam(kn, [=](Build x) {
    return mhat(x, x, brefl(x), elim_side(0, x), elim_side(1, x)); });
  std::vector<Build> ops{P};
  if (k == Kind::NatElim) {
    Build zw = branches[0][2], sw = branches[1][2];
    ops.push_back(zw);
    ops.push_back(blam("k", [=](Build x) { return blam("ih", [=](Build ih) {
      return bapp(sw, {x, x, brefl(x), elim_side(0, x), elim_side(1, x), ih}); }); }));
  } else {
    for (const auto& br : branches) ops.push_back(br[2]);
  }
  ops.push_back(ee[0]);
  Build D = node(k, std::move(ops));
  Build e1 = ee[0];
  Build motive = blam(kn + "_2", [=](Build y) { return blam(kn + "_R", [=](Build q) {
    return mhat(e1, y, q, elim_side(0, e1), elim_side(1, y)); }); });
  return bj(motive, D, e1, ee[1], ee[2])(d);
}

Term Translator::Impl::postulate(const Scope& s, const std::string& origin,
                                 const std::function<Term(const Scope&)>& goal) {
  if (!self.options_.axiom_witnesses) throw ObligationError(origin);

  // Abstract over the whole translated context, so the postulate is closed
  // and can be instantiated at the triples of `s`.
  Telescope src_tele;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.src.size(); ++i) {
    src_tele.push_back({s.src.names()[i], kernel.readback(names, s.src.type_at_level(i))});
    names.push_back(s.src.names()[i]);
  }
  Telescope target;
  Scope fresh = scope_of(src_tele, &target);
  Term type = goal(fresh);
  for (std::size_t i = target.size(); i-- > 0;) type = pi(target[i].name, target[i].type, type);

  const std::string name =
      param_name(self.current_decl_) + "_obl" + std::to_string(++self.obligation_counter_);
  Declaration ax{name, DeclKind::Axiom, type, std::nullopt, {}};
  add_declaration(self.globals_, ax);
  self.pending_.push_back(ax);
  self.obligations_.push_back({origin, type, name});

  std::vector<Term> args;
  for (const auto& tr : s.vars) {
    args.push_back(tr.left.at(s.depth));
    args.push_back(tr.right.at(s.depth));
    args.push_back(tr.witness.at(s.depth));
  }
  return apps(constant(name), args);
}

// The base case and the point are handled as for the other base types;
// only the coherence of the translated loop case is postulated.
Term Translator::Impl::derive_circ(const Scope& s, const Term& t) {
  using namespace build;
  std::ostringstream origin;
  origin << "circElim in " << self.current_decl_ << " at " << t.span().line << ":" << t.span().col
         << ": " << print(t, s.src.names());

  const Term &M = t.arg(0), &b = t.arg(1), &l = t.arg(2), &x = t.arg(3);
  auto parts = [this, M, b, l, x](const Scope& sc) {
    const std::size_t d = sc.depth;
    Val mv = kernel.eval(sc.src.env(), M);
    Val base = vatom(Kind::Base);
    Val mty = vpi("c", vatom(Kind::Circle), [](const Val&) { return vsort(true); });
    Val b_ty = vapply(mv, base);
    auto open = [&](const Term& u) { return from(Open{u, d}); };
    auto copies = [&](const Term& u, const Val& ty) {
      return std::array<Build, 3>{open(project(sc, u, Side::Left)),
                                  open(project(sc, u, Side::Right)), open(translate(sc, u, ty))};
    };
    struct Parts {
      std::array<Build, 3> m, b, l;
      std::function<Build(int, Build)> elim_side;
      Build P;
    } out;
    out.m = copies(M, mty);
    out.b = copies(b, b_ty);
    out.l = {open(project(sc, l, Side::Left)), open(project(sc, l, Side::Right)), nullptr};
    auto m = out.m;
    auto bb = out.b;
    auto ll = out.l;
    out.elim_side = [m, bb, ll](int side, Build u) {
      return node(Kind::CircElim, {m[side], bb[side], ll[side], std::move(u)});
    };
    Build Mw = m[2];
    auto es = out.elim_side;
    out.P = blam(motive_names(M, {"c"})[0], [Mw, es](Build k) {
      return bapp(Mw, {k, k, brefl(k), es(0, k), es(1, k)});
    });
    return out;
  };

  auto goal = [parts](const Scope& sc) {
    auto p = parts(sc);
    Build P = p.P, bw = p.b[2];
    Build fam = blam("y", [P](Build y) { return blam("q", [P, y](Build) { return bapp(P, {y}); }); });
    Build base = closed(simple(Kind::Base));
    return bid(bapp(P, {base}), bj(fam, bw, base, base, closed(simple(Kind::Loop))), bw)(sc.depth);
  };
  Term loop_case = postulate(s, origin.str(), goal);

  const std::size_t d = s.depth;
  auto p = parts(s);
  auto open = [&](const Term& u) { return from(Open{u, d}); };
  Build x1 = open(project(s, x, Side::Left)), x2 = open(project(s, x, Side::Right));
  Build xw = open(translate(s, x, vatom(Kind::Circle)));
  Build D = node(Kind::CircElim, {p.P, p.b[2], open(loop_case), x1});
  Build Mw = p.m[2];
  auto es = p.elim_side;
  const std::string kn = motive_names(M, {"c"})[0];
  Build motive = blam(kn + "_2", [=](Build y) { return blam(kn + "_R", [=](Build q) {
    return bapp(Mw, {x1, y, q, es(0, x1), es(1, y)}); }); });
  return bj(motive, D, x1, x2, xw)(d);
}

Term Translator::Impl::witness_for(const std::string& c) {
  auto it = self.witnesses_.find(c);
  if (it != self.witnesses_.end()) return constant(it->second);
  const GlobalEntry* entry = self.globals_.find(c);
  if (!entry) throw std::logic_error("unknown global '" + c + "' during translation");
  const Declaration decl = entry->decl;  // entries move as companions are added
  auto emitted = translate_decl(decl);
  self.pending_.insert(self.pending_.end(), emitted.begin(), emitted.end());
  return constant(param_name(c));
}

std::vector<Declaration> Translator::Impl::translate_decl(const Declaration& d) {
  auto saved_pending = std::move(self.pending_);
  self.pending_.clear();
  const std::string saved_decl = self.current_decl_;
  self.current_decl_ = d.name;
  struct Restore {
    Translator& t;
    std::vector<Declaration>& pending;
    const std::string& decl;
    ~Restore() {
      std::swap(t.pending_, pending);
      t.current_decl_ = decl;
    }
  };
  std::vector<Declaration> out;
  {
    Restore restore{self, saved_pending, saved_decl};
    const GlobalEntry* entry = self.globals_.find(d.name);
    const bool basis = entry && entry->basis;
    Scope empty;
    Term type = relate(empty, d.type, constant(d.name), constant(d.name));
    if (self.options_.print_normal) type = kernel.normalize(Context{}, type);
    Declaration c{param_name(d.name), d.kind, type, std::nullopt, d.span};
    if (d.kind == DeclKind::Axiom) {
      if (basis && !self.options_.axiom_witnesses)
        throw ObligationError("basis axiom " + d.name + " has no derived witness");
      self.obligations_.push_back({"axiom " + d.name, type, c.name});
    } else {
      c.body = translate(empty, *d.body, kernel.eval(Env{}, d.type));
    }
    add_declaration(self.globals_, c);
    self.witnesses_[d.name] = c.name;
    self.pending_.push_back(c);
    out = self.pending_;
  }
  return out;
}

// ---------------------------------------------------------------------------

Translator::Translator(GlobalEnv& globals, TranslateOptions options)
    : globals_(globals), options_(options) {}

Translator::~Translator() = default;

std::vector<Declaration> Translator::translate_decl(const Declaration& d) {
  return Impl(*this).translate_decl(d);
}

Telescope Translator::translate_tele(const Telescope& tele) {
  Telescope out;
  Impl(*this).scope_of(tele, &out);
  return out;
}

Term Translator::translate_type(const Telescope& tele, const Term& type) {
  Impl impl(*this);
  return impl.relation(impl.scope_of(tele), type);
}

Term Translator::relate(const Telescope& tele, const Term& type, const Term& lhs,
                        const Term& rhs) {
  Impl impl(*this);
  return impl.relate(impl.scope_of(tele), type, lhs, rhs);
}

Term Translator::translate_term(const Telescope& tele, const Term& term, const Term& type) {
  Impl impl(*this);
  Scope s = impl.scope_of(tele);
  return impl.translate(s, term, impl.kernel.eval(s.src.env(), type));
}

Term Translator::project_copy(const Telescope& tele, const Term& term, Side side) {
  Impl impl(*this);
  return impl.project(impl.scope_of(tele), term, side);
}

}  // namespace httparam
