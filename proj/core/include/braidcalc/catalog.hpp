#pragma once

// Named algebras and Weyl algebras used by the command-line tool.
//
// Arguments are expression strings in the builtin's symbolic variable:
//   gl              m (2), hbar (h)
//   u2              hbar (h)
//   mre             m (2), hbar (1), braiding (hecke | flip)
//   qwitt-truncated range (1..6), q (q)
//   jackson-sl2     q (q)
//   sl2-like        a (1), b (a), c (1), k (1), l (k), m (1)
//   su2-like        a (1), b (a), c (a), k (1), l (1), m (1)
//   end-involutive  m (2), or p and n for the super flip

#include <map>
#include <string>
#include <vector>

#include "braidcalc/presentation.hpp"
#include "braidcalc/weyl.hpp"

namespace braidcalc {

using BuiltinArgs = std::map<std::string, std::string>;

struct BuiltinInfo {
  std::string name;
  std::vector<std::string> parameters;
  bool has_weyl = false;
  std::string summary;
};

const std::vector<BuiltinInfo>& builtin_catalog();

// Throws Error on an unknown name or parameter.
AlgebraPresentation builtin(const std::string& name, const BuiltinArgs& args = {});
// Weyl algebra over the builtin (gl, u2, mre).
WeylPresentation builtin_weyl(const std::string& name, const BuiltinArgs& args = {});

// "a..b" with integers a <= b.
std::pair<long, long> parse_range(const std::string& text);

}  // namespace braidcalc
