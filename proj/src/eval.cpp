#include <stdexcept>

#include "httparam/kernel.hpp"

namespace httparam {

Val make_value(Value v) { return std::make_shared<const Value>(std::move(v)); }
Val vsort(bool large) { return make_value({VSort{large}}); }
Val vatom(Kind k) { return make_value({VAtom{k}}); }
Val vvar(std::size_t level, std::string name) {
  return make_value({VNeutral{Head{Kind::Var, level, std::move(name)}, {}}});
}

namespace {

Val extend(const VNeutral& n, Frame f) {
  VNeutral out = n;
  out.spine.push_back(std::move(f));
  return make_value({std::move(out)});
}

[[noreturn]] void stuck(const char* what) {
  throw std::logic_error(std::string("evaluation of an ill-typed ") + what);
}

}  // namespace

Val vapply(const Val& fn, const Val& arg) {
  if (auto l = as<VLam>(fn)) return l->body(arg);
  if (auto n = as<VNeutral>(fn)) return extend(*n, {Kind::App, {arg}});
  stuck("application");
}

Val vfst(const Val& p) {
  if (auto v = as<VPair>(p)) return v->first;
  if (auto n = as<VNeutral>(p)) return extend(*n, {Kind::Fst, {}});
  stuck("projection");
}

Val vsnd(const Val& p) {
  if (auto v = as<VPair>(p)) return v->second;
  if (auto n = as<VNeutral>(p)) return extend(*n, {Kind::Snd, {}});
  stuck("projection");
}

Env Env::push(Val v) const {
  Env out;
  out.head_ = std::make_shared<const Node>(Node{std::move(v), head_});
  out.size_ = size_ + 1;
  return out;
}

const Val& Env::lookup(std::size_t index) const {
  const Node* n = head_.get();
  for (std::size_t i = 0; i < index && n; ++i) n = n->next.get();
  if (!n) throw std::logic_error("variable out of scope during evaluation");
  return n->value;
}

namespace {

Val eliminate(Kind kind, const std::vector<Val>& ops, const Val& scrutinee) {
  if (auto n = as<VNeutral>(scrutinee)) return extend(*n, {kind, ops});
  switch (kind) {
    case Kind::J:
      if (as<VRefl>(scrutinee)) return ops[1];
      break;
    case Kind::UnitElim:
      if (auto a = as<VAtom>(scrutinee); a && a->kind == Kind::Star) return ops[1];
      break;
    case Kind::TwoElim:
      if (auto a = as<VAtom>(scrutinee)) {
        if (a->kind == Kind::Two0) return ops[1];
        if (a->kind == Kind::Two1) return ops[2];
      }
      break;
    case Kind::NatElim:
      if (auto a = as<VAtom>(scrutinee); a && a->kind == Kind::Zero) return ops[1];
      if (auto s = as<VSuc>(scrutinee))
        return vapply(vapply(ops[2], s->pred), eliminate(kind, ops, s->pred));
      break;
    case Kind::CircElim:
      if (auto a = as<VAtom>(scrutinee); a && a->kind == Kind::Base) return ops[1];
      break;
    default:
      break;
  }
  stuck("eliminator");
}

}  // namespace

Val Kernel::eval(const Env& env, const Term& t) const {
  const Kernel self = *this;
  auto closure = [self, env](const Term& body) -> Closure {
    return [self, env, body](const Val& v) { return self.eval(env.push(v), body); };
  };
  switch (t.kind()) {
    case Kind::Var:
      return env.lookup(t.index());
    case Kind::Const: {
      const GlobalEntry* g = globals_.find(t.name());
      if (!g) throw TypeError(ErrorKind::Unbound, "a declared name", t.name(), t.span());
      return g->value;
    }
    case Kind::U:
      return vsort(false);
    case Kind::Type:
      return vsort(true);
    case Kind::Pi:
      return make_value({VPi{t.name(), eval(env, t.arg(0)), closure(t.arg(1))}});
    case Kind::Sigma:
      return make_value({VSigma{t.name(), eval(env, t.arg(0)), closure(t.arg(1))}});
    case Kind::Lam:
      return make_value({VLam{t.name(), closure(t.arg(0))}});
    case Kind::App:
      return vapply(eval(env, t.arg(0)), eval(env, t.arg(1)));
    case Kind::Pair:
      return make_value({VPair{eval(env, t.arg(0)), eval(env, t.arg(1))}});
    case Kind::Fst:
      return vfst(eval(env, t.arg(0)));
    case Kind::Snd:
      return vsnd(eval(env, t.arg(0)));
    case Kind::Id:
      return make_value({VId{eval(env, t.arg(0)), eval(env, t.arg(1)), eval(env, t.arg(2))}});
    case Kind::Refl:
      return make_value({VRefl{eval(env, t.arg(0))}});
    case Kind::Suc:
      return make_value({VSuc{eval(env, t.arg(0))}});
    case Kind::Loop:
      return make_value({VNeutral{Head{Kind::Loop, 0, "loop"}, {}}});
    case Kind::J:
    case Kind::EmptyElim:
    case Kind::UnitElim:
    case Kind::TwoElim:
    case Kind::NatElim:
    case Kind::CircElim: {
      // J keeps its path last; the base-type eliminators keep their scrutinee last.
      std::vector<Val> ops;
      for (std::size_t i = 0; i + 1 < t.arity(); ++i) ops.push_back(eval(env, t.arg(i)));
      return eliminate(t.kind(), ops, eval(env, t.arg(t.arity() - 1)));
    }
    default:
      return vatom(t.kind());
  }
}

Term Kernel::readback(const std::vector<std::string>& names, const Val& v) const {
  const std::size_t depth = names.size();
  auto under = [&](const std::string& name, const Closure& body) {
    std::vector<std::string> inner = names;
    inner.push_back(name);
    return readback(inner, body(vvar(depth, name)));
  };
  return std::visit(
      [&](const auto& n) -> Term {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, VSort>) {
          return n.large ? sort_type() : sort_u();
        } else if constexpr (std::is_same_v<T, VPi>) {
          return pi(n.name, readback(names, n.dom), under(n.name, n.cod));
        } else if constexpr (std::is_same_v<T, VSigma>) {
          return sigma(n.name, readback(names, n.first), under(n.name, n.second));
        } else if constexpr (std::is_same_v<T, VLam>) {
          return lam(n.name, under(n.name, n.body));
        } else if constexpr (std::is_same_v<T, VPair>) {
          return pair(readback(names, n.first), readback(names, n.second));
        } else if constexpr (std::is_same_v<T, VId>) {
          return id_type(readback(names, n.type), readback(names, n.lhs), readback(names, n.rhs));
        } else if constexpr (std::is_same_v<T, VRefl>) {
          return refl(readback(names, n.arg));
        } else if constexpr (std::is_same_v<T, VAtom>) {
          return simple(n.kind);
        } else if constexpr (std::is_same_v<T, VSuc>) {
          return suc(readback(names, n.pred));
        } else {
          Term acc;
          switch (n.head.kind) {
            case Kind::Var:
              acc = var(depth - 1 - n.head.level, names[n.head.level]);
              break;
            case Kind::Const:
              acc = constant(n.head.name);
              break;
            default:
              acc = simple(Kind::Loop);
              break;
          }
          for (const Frame& f : n.spine) {
            switch (f.kind) {
              case Kind::App:
                acc = app(acc, readback(names, f.args[0]));
                break;
              case Kind::Fst:
                acc = fst(acc);
                break;
              case Kind::Snd:
                acc = snd(acc);
                break;
              default: {
                std::vector<Term> args;
                for (const auto& a : f.args) args.push_back(readback(names, a));
                args.push_back(acc);
                acc = Term::make(f.kind, "", std::move(args));
              }
            }
          }
          return acc;
        }
      },
      v->node);
}

Term Kernel::normalize(const Context& ctx, const Term& t) const {
  return readback(ctx, eval(ctx.env(), t));
}

bool Kernel::conv(std::size_t depth, const Val& a, const Val& b) const {
  if (a == b) return true;
  if (as<VLam>(a) || as<VLam>(b)) {
    Val x = vvar(depth);
    return conv(depth + 1, vapply(a, x), vapply(b, x));
  }
  if (as<VPair>(a) || as<VPair>(b))
    return conv(depth, vfst(a), vfst(b)) && conv(depth, vsnd(a), vsnd(b));
  if (a->node.index() != b->node.index()) return false;

  if (auto x = as<VSort>(a)) return x->large == as<VSort>(b)->large;
  if (auto x = as<VPi>(a)) {
    auto y = as<VPi>(b);
    Val v = vvar(depth);
    return conv(depth, x->dom, y->dom) && conv(depth + 1, x->cod(v), y->cod(v));
  }
  if (auto x = as<VSigma>(a)) {
    auto y = as<VSigma>(b);
    Val v = vvar(depth);
    return conv(depth, x->first, y->first) && conv(depth + 1, x->second(v), y->second(v));
  }
  if (auto x = as<VId>(a)) {
    auto y = as<VId>(b);
    return conv(depth, x->type, y->type) && conv(depth, x->lhs, y->lhs) &&
           conv(depth, x->rhs, y->rhs);
  }
  if (auto x = as<VRefl>(a)) return conv(depth, x->arg, as<VRefl>(b)->arg);
  if (auto x = as<VAtom>(a)) return x->kind == as<VAtom>(b)->kind;
  if (auto x = as<VSuc>(a)) return conv(depth, x->pred, as<VSuc>(b)->pred);

  const auto& x = *as<VNeutral>(a);
  const auto& y = *as<VNeutral>(b);
  if (x.head.kind != y.head.kind || x.head.level != y.head.level || x.head.name != y.head.name)
    return false;
  if (x.spine.size() != y.spine.size()) return false;
  for (std::size_t i = 0; i < x.spine.size(); ++i) {
    const Frame& f = x.spine[i];
    const Frame& g = y.spine[i];
    if (f.kind != g.kind || f.args.size() != g.args.size()) return false;
    for (std::size_t k = 0; k < f.args.size(); ++k)
      if (!conv(depth, f.args[k], g.args[k])) return false;
  }
  return true;
}

bool Kernel::equal(std::size_t depth, const Val& type, const Val& a, const Val& b) const {
  if (auto atom = as<VAtom>(type); atom && atom->kind == Kind::Unit) return true;
  if (auto p = as<VPi>(type)) {
    Val x = vvar(depth, p->name);
    return equal(depth + 1, p->cod(x), vapply(a, x), vapply(b, x));
  }
  if (auto s = as<VSigma>(type)) {
    Val a1 = vfst(a);
    return equal(depth, s->first, a1, vfst(b)) && equal(depth, s->second(a1), vsnd(a), vsnd(b));
  }
  return conv(depth, a, b);
}

}  // namespace httparam
