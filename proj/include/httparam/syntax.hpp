#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "httparam/term.hpp"

namespace httparam {

struct SourceFile {
  std::string path;
  std::vector<Declaration> decls;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string kind, Span span, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)), span_(span) {}

  /// One of "lexical", "syntax", "duplicate".
  const std::string& kind() const { return kind_; }
  Span span() const { return span_; }

 private:
  std::string kind_;
  Span span_;
};

/// Parses a `.htt` declaration file. Identifiers that are not bound by an
/// enclosing binder become `Const` nodes; whether they exist is the
/// kernel's concern.
SourceFile parse(std::string_view text, std::string path = "<input>");

/// Parses a single term. `scope` lists the names of enclosing variables,
/// outermost first.
Term parse_term(std::string_view text, const std::vector<std::string>& scope = {});

bool is_keyword(std::string_view word);

/// Deterministic ASCII rendering; parse(print(t)) is alpha-equal to t.
/// `scope` gives display names for the free variables of `t`, outermost
/// first.
std::string print(const Term& t, const std::vector<std::string>& scope = {});

std::string print_decl(const Declaration& d);

}  // namespace httparam
