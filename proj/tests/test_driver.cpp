#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "httparam/driver.hpp"
#include "support.hpp"

using namespace httparam;

namespace {

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "httparam_driver_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_scratch(const std::string& name, const std::string& text) {
  auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string corpus(const std::string& stem) { return support::corpus_dir() + "/" + stem + ".htt"; }

std::string slurp(const std::string& path) { return read_file(path); }

struct Run {
  ExitCode code;
  std::string out, err;
};

Run check(std::vector<std::string> inputs) {
  RunConfig cfg;
  cfg.inputs = std::move(inputs);
  std::ostringstream out, err;
  ExitCode code = cmd_check(cfg, out, err);
  return {code, out.str(), err.str()};
}

TranslateResult translate(const std::string& input, bool witnesses = false) {
  RunConfig cfg;
  cfg.inputs = {input};
  cfg.to_stdout = true;
  cfg.axiom_witnesses = witnesses;
  return translate_files(cfg);
}

int shell(const std::string& cmd) {
  int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("check: basis and corpus files") {
  Run basis = check({support::basis_file()});
  CHECK(basis.code == ExitCode::Ok);
  CHECK(basis.out.find("OK transport : ") != std::string::npos);

  Run id = check({corpus("identity")});
  CHECK(id.code == ExitCode::Ok);
  CHECK(id.out == "OK t : (X : U) -> X -> X\n");

  for (const auto& stem : support::plain_corpus()) {
    CAPTURE(stem);
    CHECK(check({corpus(stem)}).code == ExitCode::Ok);
  }
}

TEST_CASE("check: errors are reported with position and kind") {
  Run bad = check({write_scratch("universe.htt", "def x : U := U\n")});
  CHECK(bad.code == ExitCode::TypeError);
  CHECK(bad.err.find("universe.htt:1:") != std::string::npos);
  CHECK(bad.err.find("universe-violation") != std::string::npos);

  Run syntax = check({write_scratch("syntax.htt", "def x : U :=\n")});
  CHECK(syntax.code == ExitCode::TypeError);
  CHECK(syntax.err.find("ERROR ") == 0);
}

TEST_CASE("translate: goldens are reproduced byte for byte") {
  struct Case {
    std::string stem;
    bool witnesses;
  };
  for (const Case& c : {Case{"identity", false}, Case{"loopspace", false}, Case{"circle_use", true}}) {
    CAPTURE(c.stem);
    TranslateResult first = translate(corpus(c.stem), c.witnesses);
    REQUIRE(first.code == ExitCode::Ok);
    CHECK(first.text == slurp(support::golden_dir() + "/" + c.stem + ".out"));
    CHECK(translate(corpus(c.stem), c.witnesses).text == first.text);
  }
}

TEST_CASE("translate: header lists the postulates") {
  TranslateResult basic = translate(corpus("basic"));
  REQUIRE(basic.code == ExitCode::Ok);
  CHECK(basic.text.find("-- postulated: none\n") != std::string::npos);

  TranslateResult id = translate(corpus("identity"));
  CHECK(id.text.find("-- postulated: t_param\n") != std::string::npos);
  CHECK(id.text.find("--   t_param: axiom t\n") != std::string::npos);
}

TEST_CASE("translate: obligations stop the run unless postulated") {
  for (const std::string stem : {"circle_use", "univalence"}) {
    CAPTURE(stem);
    TranslateResult off = translate(corpus(stem));
    CHECK(off.code == ExitCode::Obligation);
    CHECK(off.text.empty());
    CHECK(off.diagnostic.find("OBLIGATION ") == 0);
    CHECK(off.diagnostic.find("--axiom-witnesses") != std::string::npos);

    TranslateResult on = translate(corpus(stem), true);
    CHECK(on.code == ExitCode::Ok);
    CHECK(on.text.find("-- flags: axiom-witnesses=on") != std::string::npos);
  }
  TranslateResult ua = translate(corpus("univalence"), true);
  CHECK(ua.text.find("--   ua_param: axiom ua\n") != std::string::npos);
}

TEST_CASE("translate: outputs re-check and support the derived results") {
  std::vector<std::string> stems = support::plain_corpus();
  stems.push_back("loopspace");
  for (const auto& stem : stems) {
    CAPTURE(stem);
    TranslateResult r = translate(corpus(stem));
    REQUIRE(r.code == ExitCode::Ok);
    CHECK(check({write_scratch(stem + ".out", r.text)}).code == ExitCode::Ok);
  }

  const std::string identity = write_scratch("identity.out", translate(corpus("identity")).text);
  Run nat = check({identity, corpus("derived/naturality")});
  CHECK(nat.code == ExitCode::Ok);
  CHECK(nat.out.find("OK naturality : ") != std::string::npos);

  const std::string loop = write_scratch("loopspace.out", translate(corpus("loopspace")).text);
  Run loop_nat = check({loop, corpus("paths"), corpus("derived/loopspace_naturality")});
  CHECK(loop_nat.code == ExitCode::Ok);
  CHECK(loop_nat.out.find("OK loop_naturality : ") != std::string::npos);
}

TEST_CASE("cli: exit codes and output file") {
  const std::string cli = HTTPARAM_CLI;
  const std::string out = (scratch_dir() / "cli_identity.out").string();
  CHECK(shell(cli + " --version") == 0);
  CHECK(shell(cli + " check " + corpus("basic")) == 0);
  CHECK(shell(cli + " check " + write_scratch("cli_bad.htt", "def x : U := U\n")) == 1);
  CHECK(shell(cli + " translate -o " + out + " " + corpus("identity")) == 0);
  CHECK(slurp(out) == slurp(support::golden_dir() + "/identity.out"));
  CHECK(shell(cli + " translate --stdout " + corpus("circle_use")) == 2);
  CHECK(shell(cli + " translate --stdout --axiom-witnesses " + corpus("circle_use")) == 0);
  CHECK(shell(cli + " translate " + corpus("identity")) != 0);
}
