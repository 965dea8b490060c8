#include <iostream>

#include <CLI11.hpp>

#include "httparam/driver.hpp"

int main(int argc, char** argv) {
  using namespace httparam;
  CLI::App app{"Type checker and parametricity translator for a small homotopy type theory"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunConfig cfg;
  auto* check = app.add_subcommand("check", "Type-check declaration files");
  check->add_option("files", cfg.inputs, "Input files")->required()->check(CLI::ExistingFile);

  auto* translate = app.add_subcommand("translate", "Emit parametricity companions");
  translate->add_option("file", cfg.inputs, "Input file")->required()->check(CLI::ExistingFile);
  auto* out_opt = translate->add_option("-o,--output", cfg.output, "Output file");
  auto* stdout_flag = translate->add_flag("--stdout", cfg.to_stdout, "Write to standard output");
  out_opt->excludes(stdout_flag);
  translate->add_flag("--axiom-witnesses", cfg.axiom_witnesses,
                      "Postulate witnesses the translation cannot derive");
  translate->add_flag("--print-normal", cfg.print_normal, "Print companion types in normal form");
  translate->add_flag("--no-basis", cfg.no_basis, "Do not load the basis (testing)");

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) return static_cast<int>(cmd_check(cfg, std::cout, std::cerr));
  if (cfg.output.empty() && !cfg.to_stdout) {
    std::cerr << "translate: one of -o or --stdout is required\n";
    return 1;
  }
  return static_cast<int>(cmd_translate(cfg, std::cout, std::cerr));
}
