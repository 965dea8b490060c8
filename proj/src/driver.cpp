#include "httparam/driver.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "httparam/basis.hpp"
#include "httparam/kernel.hpp"
#include "httparam/syntax.hpp"
#include "httparam/translate.hpp"

namespace httparam {

namespace {

namespace fs = std::filesystem;

std::string render_parse_error(const ParseError& e, const std::string& file) {
  std::ostringstream out;
  out << "ERROR " << file << ":" << e.span().line << ":" << e.span().col << " [" << e.kind()
      << "]: " << e.what();
  return out.str();
}

bool same_file(const std::string& a, const std::string& b) {
  std::error_code ec;
  return fs::equivalent(a, b, ec);
}

struct Session {
  GlobalEnv globals;
  std::vector<SourceFile> files;
};

// Loads the basis (unless disabled or passed as an input) and each input.
// Returns a rendered diagnostic on failure.
std::optional<std::string> load_all(const RunConfig& cfg, Session& s,
                                    std::ostream* ok_lines) {
  const std::string basis = cfg.basis.empty() ? basis_path() : cfg.basis;
  std::string current = basis;
  try {
    bool basis_is_input = false;
    for (const auto& p : cfg.inputs) basis_is_input = basis_is_input || same_file(p, basis);
    if (!cfg.no_basis && !basis_is_input) load_basis(s.globals, basis);
    for (const auto& path : cfg.inputs) {
      current = path;
      SourceFile f = parse(read_file(path), path);
      const bool is_basis = same_file(path, basis);
      for (const auto& d : f.decls) {
        add_declaration(s.globals, d, is_basis);
        if (ok_lines) *ok_lines << "OK " << d.name << " : " << print(d.type) << "\n";
      }
      s.files.push_back(std::move(f));
    }
  } catch (const ParseError& e) {
    return render_parse_error(e, current);
  } catch (const TypeError& e) {
    return e.render(current);
  } catch (const std::ios_base::failure& e) {
    return "ERROR " + current + ": " + e.what();
  } catch (const std::runtime_error& e) {
    return "ERROR " + current + ": " + e.what();
  }
  return std::nullopt;
}

}  // namespace

ExitCode cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Session s;
  if (auto diag = load_all(cfg, s, &out)) {
    err << *diag << "\n";
    return ExitCode::TypeError;
  }
  return ExitCode::Ok;
}

TranslateResult translate_files(const RunConfig& cfg) {
  TranslateResult r;
  Session s;
  if (auto diag = load_all(cfg, s, nullptr)) {
    r.code = ExitCode::TypeError;
    r.diagnostic = *diag;
    return r;
  }
  TranslateOptions opts;
  opts.axiom_witnesses = cfg.axiom_witnesses;
  opts.print_normal = cfg.print_normal;
  Translator tr(s.globals, opts);

  std::ostringstream body;
  for (const auto& f : s.files) {
    for (const auto& d : f.decls) {
      try {
        body << "\n" << print_decl(d) << "\n";
        for (const auto& c : tr.translate_decl(d)) body << "\n" << print_decl(c) << "\n";
      } catch (const ObligationError& e) {
        r.code = ExitCode::Obligation;
        r.diagnostic = "OBLIGATION " + f.path + ":" + std::to_string(d.span.line) + ":" +
                       std::to_string(d.span.col) + " in " + d.name + ": " + e.origin() +
                       " (rerun with --axiom-witnesses to postulate it)";
        return r;
      } catch (const TypeError& e) {
        r.code = ExitCode::TypeError;
        r.diagnostic = e.render(f.path);
        return r;
      }
    }
  }

  std::ostringstream head;
  head << "-- generated by httparam " << kVersion << " translate\n";
  head << "-- flags: axiom-witnesses=" << (cfg.axiom_witnesses ? "on" : "off")
       << " print-normal=" << (cfg.print_normal ? "on" : "off") << "\n";
  head << "-- postulated:";
  if (tr.obligations().empty()) head << " none";
  for (const auto& o : tr.obligations()) head << " " << o.axiom;
  head << "\n";
  for (const auto& o : tr.obligations()) head << "--   " << o.axiom << ": " << o.origin << "\n";
  r.text = head.str() + body.str();
  return r;
}

ExitCode cmd_translate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  TranslateResult r = translate_files(cfg);
  if (r.code != ExitCode::Ok) {
    err << r.diagnostic << "\n";
    return r.code;
  }
  if (cfg.to_stdout) {
    out << r.text;
    return ExitCode::Ok;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) {
    err << "ERROR cannot write " << cfg.output << "\n";
    return ExitCode::TypeError;
  }
  file << r.text;
  return ExitCode::Ok;
}

}  // namespace httparam
