#include "httparam/basis.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef HTTPARAM_DEFAULT_BASIS
#define HTTPARAM_DEFAULT_BASIS "lib/basis.htt"
#endif

namespace httparam {

std::string basis_path() {
  if (const char* env = std::getenv("HTTPARAM_BASIS"); env && *env) return env;
  return HTTPARAM_DEFAULT_BASIS;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void load_basis(GlobalEnv& globals, const std::string& path) {
  load(globals, parse(read_file(path), path), /*basis=*/true);
}

std::vector<std::string> basis_names(const GlobalEnv& globals) {
  std::vector<std::string> out;
  for (const auto& e : globals.entries())
    if (e.basis) out.push_back(e.decl.name);
  return out;
}

}  // namespace httparam
