#include <set>
#include <sstream>

#include "httparam/syntax.hpp"

namespace httparam {

namespace {

// kProd: operand position of `*`, which binds tighter than `->`.
enum Prec { kTop = 0, kProd = 1, kApp = 2, kAtom = 3 };

const char* keyword_of(Kind k) {
  switch (k) {
    case Kind::U: return "U";
    case Kind::Type: return "Type";
    case Kind::Empty: return "Empty";
    case Kind::Unit: return "Unit";
    case Kind::Two: return "Two";
    case Kind::Nat: return "Nat";
    case Kind::Circle: return "Circle";
    case Kind::Star: return "star";
    case Kind::Two0: return "two0";
    case Kind::Two1: return "two1";
    case Kind::Zero: return "zero";
    case Kind::Base: return "base";
    case Kind::Loop: return "loop";
    case Kind::Suc: return "suc";
    case Kind::Refl: return "refl";
    case Kind::Id: return "Id";
    case Kind::J: return "J";
    case Kind::EmptyElim: return "emptyElim";
    case Kind::UnitElim: return "unitElim";
    case Kind::TwoElim: return "twoElim";
    case Kind::NatElim: return "natElim";
    case Kind::CircElim: return "circElim";
    default: return nullptr;
  }
}

// Display names of everything `t` refers to beyond `bound` local binders:
// free variables (resolved through `scope`) and constants.
void visible_names(const Term& t, std::size_t bound, const std::vector<std::string>& scope,
                   std::set<std::string>& out) {
  if (t.kind() == Kind::Var) {
    if (t.index() >= bound) {
      const std::size_t outer = t.index() - bound;
      if (outer < scope.size()) out.insert(scope[scope.size() - 1 - outer]);
    }
    return;
  }
  if (t.kind() == Kind::Const) {
    out.insert(t.name());
    return;
  }
  for (std::size_t i = 0; i < t.arity(); ++i)
    visible_names(t.arg(i), bound + binders_at(t.kind(), i), scope, out);
}

class Printer {
 public:
  explicit Printer(std::vector<std::string> scope) : scope_(std::move(scope)) {}

  void term(const Term& t, Prec prec) {
    switch (t.kind()) {
      case Kind::Var: {
        if (t.index() >= scope_.size()) {
          out_ << "#" << t.index();  // ill-scoped; never produced by the kernel
          return;
        }
        out_ << scope_[scope_.size() - 1 - t.index()];
        return;
      }
      case Kind::Const:
        out_ << t.name();
        return;
      case Kind::Lam:
        return lambda(t, prec);
      case Kind::Pi:
      case Kind::Sigma:
        return binder_type(t, prec);
      case Kind::App:
        return application(t, prec);
      case Kind::Pair:
        out_ << "(";
        term(t.arg(0), kTop);
        out_ << ", ";
        term(t.arg(1), kTop);
        out_ << ")";
        return;
      case Kind::Fst:
      case Kind::Snd:
        term(t.arg(0), kAtom);
        out_ << (t.kind() == Kind::Fst ? ".1" : ".2");
        return;
      default:
        break;
    }
    const char* kw = keyword_of(t.kind());
    if (t.arity() == 0) {
      out_ << kw;
      return;
    }
    open(prec > kApp);
    out_ << kw;
    for (const auto& a : t.args()) {
      out_ << " ";
      term(a, kAtom);
    }
    close(prec > kApp);
  }

  std::string str() const { return out_.str(); }

 private:
  void open(bool paren) {
    if (paren) out_ << "(";
  }
  void close(bool paren) {
    if (paren) out_ << ")";
  }

  // Chooses the display name for a binder whose body is `body`. The name
  // must not capture anything the body refers to from outside.
  std::string pick(const std::string& wanted, const Term& body) {
    const bool used = occurs(body, 0);
    std::string base = wanted;
    if (base == "_" || base.empty()) {
      if (!used) return "_";
      base = "x";
    }
    std::set<std::string> avoid;
    visible_names(body, 1, scope_, avoid);
    if (!avoid.count(base) && !is_keyword(base)) return base;
    if (!used) return "_";
    for (int k = 1;; ++k) {
      std::string candidate = base + std::to_string(k);
      if (!avoid.count(candidate)) return candidate;
    }
  }

  void lambda(const Term& t, Prec prec) {
    open(prec > kTop);
    out_ << "fun";
    std::size_t pushed = 0;
    Term cur = t;
    while (cur.kind() == Kind::Lam) {
      std::string name = pick(cur.name(), cur.arg(0));
      out_ << " " << name;
      scope_.push_back(name);
      ++pushed;
      cur = cur.arg(0);
    }
    out_ << " => ";
    term(cur, kTop);
    scope_.resize(scope_.size() - pushed);
    close(prec > kTop);
  }

  void binder_type(const Term& t, Prec prec) {
    const bool is_pi = t.kind() == Kind::Pi;
    const bool paren = prec > (is_pi ? kTop : kProd);
    const Prec rest = is_pi ? kTop : kProd;
    open(paren);
    const char* op = is_pi ? " -> " : " * ";
    if (!occurs(t.arg(1), 0)) {
      term(t.arg(0), is_pi ? kProd : kApp);
      out_ << op;
      scope_.push_back("_");
      term(t.arg(1), rest);
      scope_.pop_back();
    } else {
      std::string name = pick(t.name(), t.arg(1));
      out_ << "(" << name << " : ";
      term(t.arg(0), kTop);
      out_ << ")" << op;
      scope_.push_back(name);
      term(t.arg(1), rest);
      scope_.pop_back();
    }
    close(paren);
  }

  void application(const Term& t, Prec prec) {
    std::vector<Term> args;
    Term head = t;
    while (head.kind() == Kind::App) {
      args.push_back(head.arg(1));
      head = head.arg(0);
    }
    open(prec > kApp);
    term(head, kApp);
    for (auto it = args.rbegin(); it != args.rend(); ++it) {
      out_ << " ";
      term(*it, kAtom);
    }
    close(prec > kApp);
  }

  std::vector<std::string> scope_;
  std::ostringstream out_;
};

}  // namespace

std::string print(const Term& t, const std::vector<std::string>& scope) {
  Printer p(scope);
  p.term(t, kTop);
  return p.str();
}

std::string print_decl(const Declaration& d) {
  std::string out = d.kind == DeclKind::Axiom ? "axiom " : "def ";
  out += d.name + " : " + print(d.type);
  if (d.body) out += " :=\n  " + print(*d.body);
  return out;
}

}  // namespace httparam
