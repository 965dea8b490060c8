#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace httparam {

inline constexpr const char* kVersion = "0.1.0";

enum class ExitCode : int { Ok = 0, TypeError = 1, Obligation = 2 };

struct RunConfig {
  std::vector<std::string> inputs;
  std::string output;  // translate only; empty with to_stdout
  bool to_stdout = false;
  bool axiom_witnesses = false;
  bool print_normal = false;
  bool no_basis = false;
  std::string basis;  // empty: basis_path()
};

/// Loads the basis and then each input, printing `OK <name> : <type>` for
/// every declaration of the inputs.
ExitCode cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Loads, translates and re-checks; writes the result only if every step
/// succeeded.
ExitCode cmd_translate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// The translated file as text, or the failure it stopped at.
struct TranslateResult {
  ExitCode code = ExitCode::Ok;
  std::string text;
  std::string diagnostic;
};
TranslateResult translate_files(const RunConfig& cfg);

}  // namespace httparam
