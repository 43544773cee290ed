#pragma once

#include <map>
#include <string>
#include <vector>

#include "feitlab/chartab.hpp"

namespace feitlab::detail {

struct TableData {
  std::string name;
  Int order = 1;
  Int exponent = 1;
  std::vector<ClassData> classes;
  std::vector<std::vector<Cyclotomic>> irreducibles;
  // For each prime q < exponent with q coprime to it: class c -> class of rep^q.
  std::map<Int, std::vector<int>> prime_galois;
};

}  // namespace feitlab::detail
