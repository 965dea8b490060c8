#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "build.hpp"
#include "httparam/kernel.hpp"
#include "httparam/translate.hpp"

namespace httparam {

namespace detail {

/// Left copy, right copy and witness of one source variable.
struct Triple {
  build::Open left, right, witness;
};

/// Source context paired with its image in the translated context.
struct Scope {
  Context src;
  std::vector<Triple> vars;        // by source level
  std::vector<std::string> names;  // target base names, by source level
  std::size_t depth = 0;           // target depth

  Scope pushed(std::size_t n) const {
    Scope s = *this;
    s.depth += n;
    return s;
  }
};

/// A source type seen through the translation: its two copies, its
/// relation, and whether that relation lands in U.
struct PathType {
  build::Build A1, A2, R;
  bool small;
};

std::string binder_base(const std::string& name, const Term& domain);
Term eta_contract2(const Term& t);

/// Type of witnesses that `aw` is carried to `bw` over the paths `p1`, `p2`.
build::Build pathover(const PathType& P, const build::Build& a1, const build::Build& a2,
                      const build::Build& aw, const build::Build& b1, const build::Build& b2,
                      const build::Build& bw, const build::Build& p1, const build::Build& p2);

}  // namespace detail

struct Translator::Impl {
  explicit Impl(Translator& owner);

  Translator& self;
  Kernel kernel;

  detail::Scope bind(const detail::Scope& s, const std::string& src_name, const std::string& base,
                     Val type) const;
  detail::Scope scope_of(const Telescope& tele, Telescope* translated = nullptr);

  Term project(const detail::Scope& s, const Term& t, Side side) const;
  Term relation(const detail::Scope& s, const Term& type);
  detail::PathType path_type(const detail::Scope& s, const Term& type);
  Term relate(const detail::Scope& s, const Term& type, const Term& lhs, const Term& rhs);
  Term translate(const detail::Scope& s, const Term& t, const Val& expected);

  Term derive_j(const detail::Scope& s, const Term& t);
  Term derive_elim(const detail::Scope& s, const Term& t);
  Term derive_circ(const detail::Scope& s, const Term& t);
  /// Postulates `goal`, closed over the translated context of `s`, and
  /// returns it instantiated there. Fails unless axiom witnesses are on.
  Term postulate(const detail::Scope& s, const std::string& origin,
                 const std::function<Term(const detail::Scope&)>& goal);
  Term witness_for(const std::string& c);

  std::vector<Declaration> translate_decl(const Declaration& d);
};

}  // namespace httparam
