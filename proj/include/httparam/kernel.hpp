#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "httparam/syntax.hpp"
#include "httparam/term.hpp"

namespace httparam {

// ---------------------------------------------------------------------------
// Semantic values
// ---------------------------------------------------------------------------

struct Value;
using Val = std::shared_ptr<const Value>;
using Closure = std::function<Val(const Val&)>;

struct VSort {
  bool large;  // false: U, true: Type
};
struct VPi {
  std::string name;
  Val dom;
  Closure cod;
};
struct VSigma {
  std::string name;
  Val first;
  Closure second;
};
struct VLam {
  std::string name;
  Closure body;
};
struct VPair {
  Val first;
  Val second;
};
struct VId {
  Val type;
  Val lhs;
  Val rhs;
};
struct VRefl {
  Val arg;
};
/// Nullary formers and constructors: Empty, Unit, Two, Nat, Circle, star,
/// two0, two1, zero, base.
struct VAtom {
  Kind kind;
};
struct VSuc {
  Val pred;
};

/// One eliminator waiting on a stuck scrutinee. `kind` is App, Fst, Snd,
/// J or one of the base-type eliminators; `args` holds every operand except
/// the scrutinee, in source order.
struct Frame {
  Kind kind;
  std::vector<Val> args;
};

/// Head of a stuck computation: a local variable (by de Bruijn level), an
/// axiom, or the circle's path constructor.
struct Head {
  Kind kind;  // Var, Const or Loop
  std::size_t level = 0;
  std::string name;
};

struct VNeutral {
  Head head;
  std::vector<Frame> spine;
};

struct Value {
  std::variant<VSort, VPi, VSigma, VLam, VPair, VId, VRefl, VAtom, VSuc, VNeutral> node;
};

template <class T>
const T* as(const Val& v) {
  return std::get_if<T>(&v->node);
}

Val make_value(Value v);
Val vsort(bool large);
Val vatom(Kind k);
Val vvar(std::size_t level, std::string name = "x");
Val vapply(const Val& fn, const Val& arg);
Val vfst(const Val& p);
Val vsnd(const Val& p);

/// Persistent evaluation environment; index 0 is the most recent entry.
class Env {
 public:
  Env() = default;
  Env push(Val v) const;
  const Val& lookup(std::size_t index) const;
  std::size_t size() const { return size_; }

 private:
  struct Node {
    Val value;
    std::shared_ptr<const Node> next;
  };
  std::shared_ptr<const Node> head_;
  std::size_t size_ = 0;
};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class ErrorKind { Mismatch, NotAFunction, NotAPair, NotAType, Unbound, UniverseViolation };

const char* error_kind_name(ErrorKind k);

class TypeError : public std::runtime_error {
 public:
  TypeError(ErrorKind kind, std::string expected, std::string actual, Span span);

  ErrorKind kind() const { return kind_; }
  const std::string& expected() const { return expected_; }
  const std::string& actual() const { return actual_; }
  Span span() const { return span_; }
  const std::string& decl() const { return decl_; }
  void set_decl(std::string d, Span fallback);

  /// `ERROR <file>:<line>:<col> [<kind>] in <decl>: expected <T1>, got <T2>`
  std::string render(const std::string& file) const;

 private:
  ErrorKind kind_;
  std::string expected_;
  std::string actual_;
  Span span_;
  std::string decl_;
};

// ---------------------------------------------------------------------------
// Global environment and local contexts
// ---------------------------------------------------------------------------

struct GlobalEntry {
  Declaration decl;
  Val type;
  Val value;  // body value for definitions, a neutral head for axioms
  bool basis = false;
};

/// Append-only map of checked declarations. Values of definitions close
/// over the environment itself, so it never moves.
class GlobalEnv {
 public:
  GlobalEnv() = default;
  GlobalEnv(const GlobalEnv&) = delete;
  GlobalEnv& operator=(const GlobalEnv&) = delete;

  const GlobalEntry* find(const std::string& name) const;
  void add(GlobalEntry e);
  const std::vector<GlobalEntry>& entries() const { return entries_; }
  std::size_t axiom_count() const;

 private:
  std::vector<GlobalEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Typing context of local variables. Levels count from the outermost.
class Context {
 public:
  Context() = default;

  Context bind(std::string name, Val type) const;
  std::size_t size() const { return types_.size(); }
  const Env& env() const { return env_; }
  const Val& type_at_index(std::size_t index) const { return types_[types_.size() - 1 - index]; }
  const Val& type_at_level(std::size_t level) const { return types_[level]; }
  /// Display names, outermost first.
  const std::vector<std::string>& names() const { return names_; }
  /// The value of the most recently bound variable.
  Val last() const { return env_.lookup(0); }

 private:
  std::vector<std::string> names_;
  std::vector<Val> types_;
  Env env_;
};

// ---------------------------------------------------------------------------
// Kernel
// ---------------------------------------------------------------------------

class Kernel {
 public:
  explicit Kernel(const GlobalEnv& globals) : globals_(globals) {}

  Val eval(const Env& env, const Term& t) const;
  /// Reads back a value into a beta-normal term at the given depth.
  Term readback(const std::vector<std::string>& names, const Val& v) const;
  Term readback(const Context& ctx, const Val& v) const { return readback(ctx.names(), v); }
  Term normalize(const Context& ctx, const Term& t) const;

  /// Untyped conversion with eta for functions and pairs.
  bool conv(std::size_t depth, const Val& a, const Val& b) const;
  /// Type-directed equality: adds eta for Unit on top of conv.
  bool equal(std::size_t depth, const Val& type, const Val& a, const Val& b) const;

  Val infer(const Context& ctx, const Term& t) const;
  void check(const Context& ctx, const Term& t, const Val& type) const;
  /// Checks that `t` is a type and returns its sort.
  Val infer_sort(const Context& ctx, const Term& t) const;
  /// True if the sort of type `t` is U.
  bool is_small(const Context& ctx, const Term& t) const;

  /// Elaborates a telescope into a context, checking each entry is a type.
  Context context_of(const Telescope& tele) const;

  const GlobalEnv& globals() const { return globals_; }

 private:
  using Domain = std::function<Val(const std::vector<Val>&)>;
  void check_motive(const Context& ctx, const Term& motive, const std::vector<Domain>& doms) const;
  void convert(const Context& ctx, const Term& at, const Val& expected, const Val& actual) const;
  std::string show(const Context& ctx, const Val& v) const;
  [[noreturn]] void mismatch(const Context& ctx, const Term& at, const Val& expected,
                             const Val& actual, ErrorKind kind = ErrorKind::Mismatch) const;

  const GlobalEnv& globals_;
};

/// Checks one declaration against `globals` and appends it.
void add_declaration(GlobalEnv& globals, const Declaration& d, bool basis = false);

/// Checks every declaration of `file` in order. The first failure throws
/// a TypeError carrying the declaration name.
void load(GlobalEnv& globals, const SourceFile& file, bool basis = false);

}  // namespace httparam
