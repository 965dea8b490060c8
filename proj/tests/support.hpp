#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "httparam/basis.hpp"
#include "httparam/kernel.hpp"
#include "httparam/syntax.hpp"
#include "httparam/term.hpp"

namespace support {

using namespace httparam;

inline std::string corpus_dir() { return HTTPARAM_SOURCE_DIR "/corpus"; }
inline std::string golden_dir() { return HTTPARAM_SOURCE_DIR "/tests/golden"; }
inline std::string basis_file() { return HTTPARAM_SOURCE_DIR "/lib/basis.htt"; }

/// Corpus files that translate without postulates and can share one
/// environment, in load order. loopspace.htt reuses the name `t` and is
/// loaded on its own.
inline std::vector<std::string> plain_corpus() {
  return {"identity", "basic", "paths", "nat", "two", "equiv"};
}

inline SourceFile parse_corpus(const std::string& stem) {
  const std::string path = corpus_dir() + "/" + stem + ".htt";
  return parse(read_file(path), path);
}

/// Basis plus every plain corpus file, checked into `g`.
inline std::vector<Declaration> load_plain(GlobalEnv& g) {
  load_basis(g, basis_file());
  std::vector<Declaration> decls;
  for (const auto& stem : plain_corpus()) {
    SourceFile f = parse_corpus(stem);
    load(g, f);
    decls.insert(decls.end(), f.decls.begin(), f.decls.end());
  }
  return decls;
}

inline Term parse_in(const std::string& text, const std::vector<std::string>& scope = {}) {
  return parse_term(text, scope);
}

/// Peels the Pi telescope of `type` alongside the lambdas of `body`.
struct Opened {
  Telescope tele;
  Term type;
  Term body;
};
inline Opened open_lambdas(const Term& type, const Term& body) {
  Opened o{{}, type, body};
  while (o.type.kind() == Kind::Pi && o.body.kind() == Kind::Lam) {
    o.tele.push_back({o.body.name(), o.type.arg(0)});
    o.type = o.type.arg(1);
    o.body = o.body.arg(0);
  }
  return o;
}

/// Random well-scoped terms, not necessarily well-typed.
class TermGen {
 public:
  explicit TermGen(unsigned seed) : rng_(seed) {}

  Term gen(std::size_t size, std::size_t depth) {
    if (size <= 1) return leaf(depth);
    // Nodes needed by each choice below, counting the node itself.
    static const std::size_t needs[] = {2, 3, 3, 3, 3, 3, 2, 2, 4, 6, 5, 4};
    const std::size_t choice = pick(12);
    if (needs[choice] > size) return leaf(depth);
    switch (choice) {
      case 0: return lam(binder(), gen(size - 1, depth + 1));
      case 1: case 2: {
        auto [a, b] = split(size - 1);
        return Term::make(pick(2) ? Kind::Pi : Kind::Sigma, binder(), {gen(a, depth), gen(b, depth + 1)});
      }
      case 3: case 4: {
        auto [a, b] = split(size - 1);
        return app(gen(a, depth), gen(b, depth));
      }
      case 5: {
        auto [a, b] = split(size - 1);
        return pair(gen(a, depth), gen(b, depth));
      }
      case 6: return pick(2) ? fst(gen(size - 1, depth)) : snd(gen(size - 1, depth));
      case 7: return pick(2) ? refl(gen(size - 1, depth)) : suc(gen(size - 1, depth));
      case 8: {
        auto parts = split_n(size - 1, 3);
        return id_type(gen(parts[0], depth), gen(parts[1], depth), gen(parts[2], depth));
      }
      case 9: {
        auto parts = split_n(size - 1, 5);
        return j_elim(gen(parts[0], depth), gen(parts[1], depth), gen(parts[2], depth),
                      gen(parts[3], depth), gen(parts[4], depth));
      }
      case 10: {
        auto parts = split_n(size - 1, 4);
        return nat_elim(gen(parts[0], depth), gen(parts[1], depth), gen(parts[2], depth),
                        gen(parts[3], depth));
      }
      default: {
        auto parts = split_n(size - 2, 2);
        return unit_elim(gen(parts[0], depth), leaf(depth), gen(parts[1], depth));
      }
    }
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

 private:
  Term leaf(std::size_t depth) {
    static const Kind atoms[] = {Kind::U, Kind::Nat, Kind::Zero, Kind::Unit, Kind::Star,
                                 Kind::Two0, Kind::Circle, Kind::Base, Kind::Loop, Kind::Empty};
    if (depth > 0 && pick(2)) return var(pick(depth), "v");
    if (pick(4) == 0) return constant(pick(2) ? "f" : "g");
    return simple(atoms[pick(std::size(atoms))]);
  }
  std::string binder() {
    static const char* names[] = {"x", "y", "_", "z"};
    return names[pick(4)];
  }
  std::pair<std::size_t, std::size_t> split(std::size_t n) {
    if (n < 2) return {1, 1};
    const std::size_t a = 1 + pick(n - 1);
    return {a, n - a};
  }
  std::vector<std::size_t> split_n(std::size_t n, std::size_t k) {
    std::vector<std::size_t> out(k, 1);
    for (std::size_t extra = n > k ? n - k : 0; extra > 0; --extra) ++out[pick(k)];
    return out;
  }

  std::mt19937 rng_;
};

}  // namespace support
