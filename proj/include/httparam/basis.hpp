#pragma once

#include <string>
#include <vector>

#include "httparam/kernel.hpp"

namespace httparam {

/// Location of `basis.htt`: `$HTTPARAM_BASIS` if set, otherwise the copy
/// shipped with the sources.
std::string basis_path();

std::string read_file(const std::string& path);

/// Parses and checks the basis into `globals`, marking every entry as
/// reserved.
void load_basis(GlobalEnv& globals, const std::string& path = basis_path());

/// Names defined by the basis, in declaration order.
std::vector<std::string> basis_names(const GlobalEnv& globals);

/// The two postulates the basis is allowed to contain.
inline const std::vector<std::string>& basis_axioms() {
  static const std::vector<std::string> names{"ua", "circElim_loop"};
  return names;
}

}  // namespace httparam
