#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "httparam/kernel.hpp"
#include "httparam/term.hpp"

namespace httparam {

enum class Side { Left, Right };

struct TranslateOptions {
  /// Postulate witnesses that are not derived (circle eliminators, basis
  /// axioms) instead of failing.
  bool axiom_witnesses = false;
  /// Emit companion types in normal form.
  bool print_normal = false;
};

/// A witness the translation could not build from its clauses.
struct WitnessObligation {
  std::string origin;  // human-readable occurrence
  Term type;           // closed generated type
  std::string axiom;   // name of the postulate that resolves it
};

/// Raised when an obligation is met with postulation disabled.
class ObligationError : public std::runtime_error {
 public:
  explicit ObligationError(const std::string& origin)
      : std::runtime_error("unresolved obligation: " + origin), origin_(origin) {}
  const std::string& origin() const { return origin_; }

 private:
  std::string origin_;
};

/// Name of the parametricity companion of global `c`.
std::string param_name(const std::string& c);

/// The relational translation. It shares `globals` with the kernel: every
/// companion it produces is checked and appended there before it is
/// returned, so later declarations can refer to it.
class Translator {
 public:
  Translator(GlobalEnv& globals, TranslateOptions options = {});
  ~Translator();
  Translator(const Translator&) = delete;
  Translator& operator=(const Translator&) = delete;

  /// Translates a loaded declaration. Returns every declaration emitted
  /// on its behalf, in dependency order: companions of basis names it
  /// uses, postulated obligations, then `<name>_param` itself.
  std::vector<Declaration> translate_decl(const Declaration& d);

  /// `(x : A)` becomes `(x_1 : A) (x_2 : A) (x_R : R_A x_1 x_2)`.
  Telescope translate_tele(const Telescope& tele);

  /// Binary relation of type `type` in context `tele`, as a term of two
  /// arguments over the translated telescope.
  Term translate_type(const Telescope& tele, const Term& type);

  /// The relation of `type` applied to `lhs` and `rhs`, which live in the
  /// translated telescope.
  Term relate(const Telescope& tele, const Term& type, const Term& lhs, const Term& rhs);

  /// Witness that `term` (of type `type` in `tele`) relates its two copies.
  Term translate_term(const Telescope& tele, const Term& term, const Term& type);

  /// `term` with every variable replaced by its left or right copy.
  Term project_copy(const Telescope& tele, const Term& term, Side side);

  const std::vector<WitnessObligation>& obligations() const { return obligations_; }
  /// Source global -> companion name.
  const std::map<std::string, std::string>& witnesses() const { return witnesses_; }

 private:
  struct Impl;
  friend struct Impl;

  GlobalEnv& globals_;
  TranslateOptions options_;
  std::map<std::string, std::string> witnesses_;
  std::vector<WitnessObligation> obligations_;
  std::vector<Declaration> pending_;
  std::string current_decl_;
  int obligation_counter_ = 0;
};

}  // namespace httparam
