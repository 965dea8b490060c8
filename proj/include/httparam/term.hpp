#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace httparam {

struct Span {
  int line = 0;
  int col = 0;
};

enum class Kind : std::uint8_t {
  Var,
  Const,
  U,
  Type,
  Pi,
  Lam,
  App,
  Sigma,
  Pair,
  Fst,
  Snd,
  Id,
  Refl,
  J,
  Empty,
  Unit,
  Two,
  Nat,
  Circle,
  Star,
  Two0,
  Two1,
  Zero,
  Suc,
  Base,
  Loop,
  EmptyElim,
  UnitElim,
  TwoElim,
  NatElim,
  CircElim,
};

/// Number of variables bound by child `child` of a node of kind `k`.
std::size_t binders_at(Kind k, std::size_t child);

/// Fixed number of children for each kind.
std::size_t arity_of(Kind k);

/// Immutable, shared term of the object theory.
///
/// Variables are de Bruijn indices (0 = innermost binder). Binder and
/// variable nodes keep a display name used only for printing; equality
/// never looks at it.
class Term {
 public:
  Term() = default;

  Kind kind() const { return node_->kind; }
  std::size_t index() const { return node_->index; }
  const std::string& name() const { return node_->name; }
  std::size_t arity() const { return node_->args.size(); }
  const Term& arg(std::size_t i) const { return node_->args.at(i); }
  const std::vector<Term>& args() const { return node_->args; }
  Span span() const { return node_->span; }

  bool is(Kind k) const { return node_ && node_->kind == k; }
  bool same_node(const Term& o) const { return node_ == o.node_; }
  explicit operator bool() const { return static_cast<bool>(node_); }

  static Term make(Kind kind, std::string name, std::vector<Term> args,
                   std::size_t index = 0, Span span = {});

  Term with_span(Span span) const;
  Term with_args(std::vector<Term> args) const;

 private:
  struct Node {
    Kind kind;
    std::size_t index;
    std::string name;
    std::vector<Term> args;
    Span span;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Smart constructors.
Term var(std::size_t index, std::string name = "x");
Term constant(std::string name);
Term sort_u();
Term sort_type();
Term pi(std::string binder, Term dom, Term cod);
Term arrow(Term dom, Term cod);  // cod is given unshifted (does not see the binder)
Term lam(std::string binder, Term body);
Term app(Term fn, Term arg);
Term apps(Term fn, std::initializer_list<Term> args);
Term apps(Term fn, const std::vector<Term>& args);
Term sigma(std::string binder, Term first, Term second);
Term pair(Term a, Term b);
Term fst(Term t);
Term snd(Term t);
Term id_type(Term type, Term lhs, Term rhs);
Term refl(Term a);
Term j_elim(Term motive, Term base, Term lhs, Term rhs, Term path);
Term simple(Kind k);  // nullary formers and constructors
Term suc(Term n);
Term empty_elim(Term motive, Term scrutinee);
Term unit_elim(Term motive, Term star_case, Term scrutinee);
Term two_elim(Term motive, Term case0, Term case1, Term scrutinee);
Term nat_elim(Term motive, Term zero_case, Term suc_case, Term scrutinee);
Term circ_elim(Term motive, Term base_case, Term loop_case, Term scrutinee);

/// Adds `by` to every variable index >= cutoff. Aborts if a negative shift
/// would drop a referenced variable below the cutoff.
Term shift(const Term& t, std::ptrdiff_t by, std::size_t cutoff = 0);

/// Removes variable `k` from the scope of `t`, replacing it with `u`.
/// `u` lives in the scope outside the removed binder; variables bound
/// inside it (indices < k) are kept, variables above it move down by one.
Term substitute(const Term& t, std::size_t k, const Term& u);

/// Removes the binder at index `k` when `t` does not mention it.
std::optional<Term> strengthen(const Term& t, std::size_t k = 0);

bool occurs(const Term& t, std::size_t index);
bool alpha_equal(const Term& a, const Term& b);

/// Number of nodes; used by generators and reports.
std::size_t term_size(const Term& t);

struct TeleEntry {
  std::string name;
  Term type;
};

/// Ordered context: entry k may mention entries 0..k-1, where the most
/// recent entry is variable 0.
using Telescope = std::vector<TeleEntry>;

enum class DeclKind { Definition, Axiom };

struct Declaration {
  std::string name;
  DeclKind kind = DeclKind::Definition;
  Term type;
  std::optional<Term> body;
  Span span;
};

}  // namespace httparam
